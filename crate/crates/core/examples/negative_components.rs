//! Inspect the components formed by chores both endpoints dislike.

use std::cmp::Ordering;

use chore_orient::fixtures::two_negative_components;

fn main() {
    let instance = two_negative_components();
    let report = instance.negative_components();
    for (i, c) in report.components.iter().enumerate() {
        let shape = match c.negative_edge_count().cmp(&c.size()) {
            Ordering::Less => "tree",
            Ordering::Equal => "one cycle",
            Ordering::Greater => "too many edges",
        };
        println!(
            "component {i}: vertices {:?}, {} negative edges ({shape})",
            c.vertices.iter().map(|v| v.0).collect::<Vec<_>>(),
            c.negative_edge_count()
        );
    }
}
