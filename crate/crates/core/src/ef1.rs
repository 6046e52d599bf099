//! EF1 orientations in linear time.
//!
//! An orientation of a simple graph is EF1 exactly when no vertex receives
//! two edges it values negatively. Edges worth zero to some endpoint go to
//! that endpoint and never matter; the edges negative to both ends must be
//! oriented with in-degree at most one, which is possible exactly when every
//! connected component of them has no more edges than vertices.

use crate::efx::orient_in_degree_one;
use crate::error::Result;
use crate::instance::{ChoreInstance, Orientation, VertexId};

pub fn solve_ef1(instance: &ChoreInstance) -> Result<Option<Orientation>> {
    instance.require_simple()?;
    let report = instance.negative_components();
    if report
        .components
        .iter()
        .any(|c| c.negative_edge_count() > c.size())
    {
        return Ok(None);
    }

    let mut receiver = vec![VertexId(usize::MAX); instance.edge_count()];
    for (id, edge) in instance.edges().iter().enumerate() {
        receiver[id] = match (edge.util_u == 0, edge.util_v == 0) {
            (true, true) => edge.u.min(edge.v),
            (true, false) => edge.u,
            (false, true) => edge.v,
            (false, false) => continue,
        };
    }
    for component in report.components.iter().filter(|c| !c.edges.is_empty()) {
        for (edge, to) in
            orient_in_degree_one(instance, &component.vertices, &component.edges, None)?
        {
            receiver[edge] = to;
        }
    }
    Ok(Some(Orientation::from_receivers(receiver)))
}

/// Every vertex receives at most one edge of negative utility to it.
pub fn ef1_structural_condition(
    instance: &ChoreInstance,
    orientation: &Orientation,
) -> Result<bool> {
    instance.check_orientation(orientation)?;
    let mut negative_received = vec![0usize; instance.vertex_count()];
    for (edge, &to) in instance.edges().iter().zip(orientation.receivers()) {
        if edge.utility_to(to) < 0 {
            negative_received[to.0] += 1;
        }
    }
    Ok(negative_received.iter().all(|&count| count <= 1))
}
