//! Vertex covers that take at most one vertex per group and avoid a
//! forbidden set.

use chore_orient::instance::{ChoreInstance, Edge, VertexId};
use chore_orient::pd_cover::{build_formula, find_cover, verify_cover, PdInstance};

fn main() -> chore_orient::Result<()> {
    // Path 0–1–2–3; vertices 1 and 2 share a group, 3 is forbidden.
    let path = ChoreInstance::multigraph(
        4,
        vec![
            Edge::new(0, 1, 0, 0),
            Edge::new(1, 2, 0, 0),
            Edge::new(2, 3, 0, 0),
        ],
    )?;
    let pd = PdInstance::new(
        path,
        vec![vec![VertexId(1), VertexId(2)]],
        vec![VertexId(3)],
    )?;
    println!("clauses: {}", build_formula(&pd).clause_count());
    match find_cover(&pd) {
        Some(cover) => println!(
            "cover {:?}, valid: {}",
            cover.vertices(),
            verify_cover(&pd, &cover)
        ),
        None => println!("no cover"),
    }

    // A triangle needs two of its vertices, so one group cannot hold them all.
    let triangle = ChoreInstance::multigraph(
        3,
        vec![
            Edge::new(0, 1, 0, 0),
            Edge::new(1, 2, 0, 0),
            Edge::new(2, 0, 0, 0),
        ],
    )?;
    let group = vec![VertexId(0), VertexId(1), VertexId(2)];
    let pd = PdInstance::new(triangle, vec![group], vec![])?;
    println!("triangle in one group: {:?}", find_cover(&pd));
    Ok(())
}
