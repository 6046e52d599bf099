//! EFX0 orientations, including a graph with chores that only one endpoint
//! dislikes.

use chore_orient::efx::{plan_objective, solve, ObjectiveOutcome};
use chore_orient::fixtures::two_negative_components;
use chore_orient::instance::{ChoreInstance, Edge};
use chore_orient::oracle::{check_orientation, Criterion};

fn main() -> chore_orient::Result<()> {
    let instance = ChoreInstance::simple(
        4,
        vec![
            Edge::weighted(0, 1, -2),
            Edge::weighted(1, 2, -1),
            Edge::new(2, 3, 0, 0),
            Edge::new(3, 0, -4, 0),
        ],
    )?;
    match solve(&instance)? {
        Some(o) => {
            println!("EFX0 orientation: {:?}", o.receivers());
            println!(
                "verified: {}",
                check_orientation(&instance, &o, Criterion::Efx0)?
            );
        }
        None => println!("no EFX0 orientation"),
    }

    // The bundled instance has two negative components; a dummy chore
    // inside the unicyclic one cannot be absorbed by anyone.
    let fixture = two_negative_components();
    if let ObjectiveOutcome::Planned(plan) = plan_objective(&fixture)? {
        println!("groups {:?}", plan.pd.groups());
        println!("forbidden {:?}", plan.pd.forbidden());
        println!(
            "cover {:?}",
            plan.cover.as_ref().map(|c| c.vertices().to_vec())
        );
    }
    println!("fixture orientable: {}", solve(&fixture)?.is_some());
    Ok(())
}
