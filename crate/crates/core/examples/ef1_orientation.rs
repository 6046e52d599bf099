//! Find an EF1 orientation of a small simple graph, then break it with a
//! negative self-loop.

use chore_orient::ef1::{ef1_structural_condition, solve_ef1};
use chore_orient::instance::{ChoreInstance, Edge};
use chore_orient::oracle::{check_orientation, Criterion};

fn main() -> chore_orient::Result<()> {
    // A negative triangle on 0, 1, 2 with a pendant chore 2–3 that agent 3
    // does not mind.
    let mut edges = vec![
        Edge::weighted(0, 1, -2),
        Edge::weighted(1, 2, -1),
        Edge::weighted(2, 0, -3),
        Edge::new(2, 3, -1, 0),
    ];
    let instance = ChoreInstance::simple(4, edges.clone())?;
    let orientation = solve_ef1(&instance)?.expect("a triangle orients cyclically");
    for (edge, to) in orientation.receivers().iter().enumerate() {
        println!("edge {edge} -> agent {to}");
    }
    println!(
        "EF1 by definition: {}",
        check_orientation(&instance, &orientation, Criterion::Ef1)?
    );
    println!(
        "one negative chore per agent: {}",
        ef1_structural_condition(&instance, &orientation)?
    );

    // A disliked self-loop adds a fourth negative chore on three agents.
    edges.push(Edge::self_loop(0, -1));
    let overloaded = ChoreInstance::simple(4, edges)?;
    println!(
        "with a negative loop at 0: {:?}",
        solve_ef1(&overloaded)?.map(|o| o.receivers().to_vec())
    );
    Ok(())
}
