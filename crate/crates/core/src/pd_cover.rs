//! Vertex covers constrained by groups and a forbidden set.
//!
//! A `(P, D)`-vertex cover of `H` covers every edge, takes at most one vertex
//! from each group in `P` and nothing from `D`. [`find_cover`] decides this
//! by a 2SAT encoding with one variable per vertex.

use crate::error::{Error, Result};
use crate::instance::{ChoreInstance, VertexId};
use crate::twosat::{Literal, TwoSatFormula};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdInstance {
    graph: ChoreInstance,
    groups: Vec<Vec<VertexId>>,
    forbidden: Vec<VertexId>,
}

impl PdInstance {
    /// `graph` is read as a plain undirected graph; utilities are ignored.
    pub fn new(
        graph: ChoreInstance,
        groups: Vec<Vec<VertexId>>,
        forbidden: Vec<VertexId>,
    ) -> Result<Self> {
        let mut grouped = vec![false; graph.vertex_count()];
        for &vertex in groups.iter().flatten() {
            graph.check_vertex(vertex)?;
            if std::mem::replace(&mut grouped[vertex.0], true) {
                return Err(Error::OverlappingGroups { vertex: vertex.0 });
            }
        }
        for &vertex in &forbidden {
            graph.check_vertex(vertex)?;
        }
        Ok(PdInstance {
            graph,
            groups,
            forbidden,
        })
    }

    pub fn graph(&self) -> &ChoreInstance {
        &self.graph
    }

    pub fn groups(&self) -> &[Vec<VertexId>] {
        &self.groups
    }

    pub fn forbidden(&self) -> &[VertexId] {
        &self.forbidden
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

/// A vertex set, sorted ascending without repeats.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cover {
    vertices: Vec<VertexId>,
}

impl Cover {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Cover { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, vertex: VertexId) -> bool {
        self.vertices.binary_search(&vertex).is_ok()
    }

    pub fn membership(&self, vertex_count: usize) -> Vec<bool> {
        let mut member = vec![false; vertex_count];
        for v in &self.vertices {
            member[v.0] = true;
        }
        member
    }
}

/// One variable per vertex of `H` with clauses
/// `{x_i, x_j}` per edge (including `i = j`),
/// `{¬x_i, ¬x_j}` per pair of distinct vertices in a group, and
/// `{¬x_i}` per forbidden vertex.
pub fn build_formula(instance: &PdInstance) -> TwoSatFormula {
    let pair_count: usize = instance
        .groups
        .iter()
        .map(|g| g.len() * g.len().saturating_sub(1) / 2)
        .sum();
    let mut formula = TwoSatFormula::with_capacity(
        instance.vertex_count(),
        instance.graph.edge_count() + pair_count + instance.forbidden.len(),
    );
    let mut add = |a, b| {
        formula
            .add_clause(a, b)
            .expect("vertex ids were validated against the graph")
    };
    for edge in instance.graph.edges() {
        add(Literal::positive(edge.u.0), Literal::positive(edge.v.0));
    }
    for group in &instance.groups {
        for (k, &i) in group.iter().enumerate() {
            for &j in &group[k + 1..] {
                add(Literal::negative(i.0), Literal::negative(j.0));
            }
        }
    }
    for &i in &instance.forbidden {
        add(Literal::negative(i.0), Literal::negative(i.0));
    }
    formula
}

/// A `(P, D)`-vertex cover if one exists: the vertices whose variables are
/// true in a satisfying assignment of [`build_formula`].
pub fn find_cover(instance: &PdInstance) -> Option<Cover> {
    let assignment = build_formula(instance).solve()?;
    let vertices = assignment
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &chosen)| chosen)
        .map(|(i, _)| VertexId(i))
        .collect();
    Some(Cover { vertices })
}

/// Checks the three cover conditions directly.
pub fn verify_cover(instance: &PdInstance, cover: &Cover) -> bool {
    let n = instance.vertex_count();
    if cover.vertices.iter().any(|v| v.0 >= n) {
        return false;
    }
    let member = cover.membership(n);
    let covers_edges = instance
        .graph
        .edges()
        .iter()
        .all(|e| member[e.u.0] || member[e.v.0]);
    let groups_ok = instance
        .groups
        .iter()
        .all(|g| g.iter().filter(|v| member[v.0]).count() <= 1);
    let avoids_forbidden = instance.forbidden.iter().all(|v| !member[v.0]);
    covers_edges && groups_ok && avoids_forbidden
}
