//! EFX0 orientations.
//!
//! [`solve`] subdivides every non-objective edge, solves the resulting
//! objective instance with [`solve_objective`] and maps the answer back.
//! On an objective simple graph an orientation is EFX0 exactly when every
//! vertex receives a single edge or only dummy edges, so the objective
//! solver has to:
//!
//! * reject any negative component with more negative edges than vertices,
//! * pick the set `C` of vertices allowed to absorb dummy edges: it must
//!   cover all dummy edges, contain at most one vertex of each tree-shaped
//!   component and none of a unicyclic one (a [`PdInstance`]), and
//! * orient negative edges so no vertex gets two, rooting each tree at its
//!   vertex in `C`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::instance::{ChoreInstance, EdgeClass, NegativeComponentReport, Orientation, VertexId};
use crate::pd_cover::{find_cover, Cover, PdInstance};

/// The cover instance derived from an objective instance, and its solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfxObjectivePlan {
    pub report: NegativeComponentReport,
    /// `H` holds exactly the dummy edges; groups are the components with one
    /// fewer negative edge than vertices; the forbidden set is every vertex of
    /// a component with as many negative edges as vertices.
    pub pd: PdInstance,
    pub cover: Option<Cover>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectiveOutcome {
    /// Component `component` of the report has more negative edges than vertices.
    Overloaded {
        report: NegativeComponentReport,
        component: usize,
    },
    Planned(EfxObjectivePlan),
}

/// Builds the negative-component report and, unless a component is
/// overloaded, the cover instance and its solution.
pub fn plan_objective(instance: &ChoreInstance) -> Result<ObjectiveOutcome> {
    instance.require_objective()?;
    instance.require_simple()?;

    let report = instance.negative_components();
    if let Some(component) = report
        .components
        .iter()
        .position(|c| c.negative_edge_count() > c.size())
    {
        return Ok(ObjectiveOutcome::Overloaded { report, component });
    }

    let dummy_edges = instance
        .edges()
        .iter()
        .filter(|e| e.class() == EdgeClass::Dummy)
        .copied()
        .collect();
    let graph = ChoreInstance::multigraph(instance.vertex_count(), dummy_edges)?;
    let mut groups = Vec::new();
    let mut forbidden = Vec::new();
    for component in &report.components {
        if component.negative_edge_count() + 1 == component.size() {
            groups.push(component.vertices.clone());
        } else {
            forbidden.extend_from_slice(&component.vertices);
        }
    }
    let pd = PdInstance::new(graph, groups, forbidden)?;
    let cover = find_cover(&pd);
    Ok(ObjectiveOutcome::Planned(EfxObjectivePlan {
        report,
        pd,
        cover,
    }))
}

impl EfxObjectivePlan {
    /// The orientation built from the cover, or `None` if there is no cover.
    pub fn orientation(&self, instance: &ChoreInstance) -> Result<Option<Orientation>> {
        let Some(cover) = &self.cover else {
            return Ok(None);
        };
        let member = cover.membership(instance.vertex_count());
        let mut receiver = vec![VertexId(usize::MAX); instance.edge_count()];

        for (id, edge) in instance.edges().iter().enumerate() {
            if edge.class() != EdgeClass::Dummy {
                continue;
            }
            receiver[id] = match (member[edge.u.0], member[edge.v.0]) {
                (true, true) => edge.u.min(edge.v),
                (true, false) => edge.u,
                (false, true) => edge.v,
                (false, false) => unreachable!("cover misses dummy edge {id}"),
            };
        }

        for component in &self.report.components {
            if component.edges.is_empty() {
                continue;
            }
            let root = (component.negative_edge_count() + 1 == component.size()).then(|| {
                component
                    .vertices
                    .iter()
                    .copied()
                    .find(|v| member[v.0])
                    .unwrap_or(component.vertices[0])
            });
            for (edge, to) in
                orient_in_degree_one(instance, &component.vertices, &component.edges, root)?
            {
                receiver[edge] = to;
            }
        }
        Ok(Some(Orientation::from_receivers(receiver)))
    }
}

/// EFX0 orientation of an objective simple instance, if one exists.
pub fn solve_objective(instance: &ChoreInstance) -> Result<Option<Orientation>> {
    match plan_objective(instance)? {
        ObjectiveOutcome::Overloaded { .. } => Ok(None),
        ObjectiveOutcome::Planned(plan) => plan.orientation(instance),
    }
}

/// EFX0 orientation of any simple instance, if one exists.
pub fn solve(instance: &ChoreInstance) -> Result<Option<Orientation>> {
    let map = instance.subdivide()?;
    match solve_objective(&map.objective)? {
        Some(objective_orientation) => Ok(Some(map.lift(&objective_orientation)?)),
        None => Ok(None),
    }
}

/// On an objective instance: every vertex receives exactly one edge or only
/// dummy edges.
pub fn structural_efx_condition(
    instance: &ChoreInstance,
    orientation: &Orientation,
) -> Result<bool> {
    instance.require_objective()?;
    instance.check_orientation(orientation)?;
    let n = instance.vertex_count();
    let mut received = vec![0usize; n];
    let mut received_negative = vec![false; n];
    for (edge, &to) in instance.edges().iter().zip(orientation.receivers()) {
        received[to.0] += 1;
        if edge.class() == EdgeClass::Negative {
            received_negative[to.0] = true;
        }
    }
    Ok((0..n).all(|i| received[i] == 1 || !received_negative[i]))
}

/// Orients the edges of a connected component so that no vertex receives two.
///
/// With one edge fewer than vertices the component is a tree; edges point
/// away from `root` (the smallest vertex when `root` is `None`). With as many
/// edges as vertices it has exactly one cycle (a self-loop counts); the cycle
/// is oriented around and every other edge points away from it, giving each
/// vertex in-degree one. Returns `(edge id, receiver)` pairs.
pub fn orient_in_degree_one(
    instance: &ChoreInstance,
    vertices: &[VertexId],
    edges: &[usize],
    root: Option<VertexId>,
) -> Result<Vec<(usize, VertexId)>> {
    let k = vertices.len();
    let m = edges.len();
    if k == 0 {
        return match m {
            0 => Ok(Vec::new()),
            _ => Err(Error::UnsupportedEdgeCount {
                vertices: 0,
                edges: m,
            }),
        };
    }
    if m + 1 != k && m != k {
        return Err(Error::UnsupportedEdgeCount {
            vertices: k,
            edges: m,
        });
    }

    let local: HashMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let root = match root {
        Some(_) if m == k => return Err(Error::RootOnUnicyclic),
        Some(r) => *local
            .get(&r)
            .ok_or(Error::RootOutsideComponent { vertex: r.0 })?,
        None => (0..k)
            .min_by_key(|&i| vertices[i])
            .expect("component is non-empty"),
    };

    let mut adjacent: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    let mut self_loop = None;
    for &id in edges {
        let edge = instance.edge(id)?;
        let (Some(&a), Some(&b)) = (local.get(&edge.u), local.get(&edge.v)) else {
            return Err(Error::EdgeOutsideComponent { edge: id });
        };
        if a == b {
            self_loop = Some((id, a));
        } else {
            adjacent[a].push((b, id));
            adjacent[b].push((a, id));
        }
    }

    let mut seen = vec![false; k];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adjacent[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    if reached != k {
        return Err(Error::DisconnectedComponent);
    }

    let mut oriented = Vec::with_capacity(m);
    let mut seen = vec![false; k];
    let mut queue = VecDeque::new();

    if m + 1 == k {
        seen[root] = true;
        queue.push_back(root);
    } else if let Some((id, at)) = self_loop {
        oriented.push((id, vertices[at]));
        seen[at] = true;
        queue.push_back(at);
    } else {
        // Peel leaves until only the cycle is left.
        let mut degree: Vec<usize> = adjacent.iter().map(Vec::len).collect();
        let mut removed = vec![false; k];
        let mut leaves: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
        while let Some(x) = leaves.pop() {
            removed[x] = true;
            for &(y, _) in &adjacent[x] {
                if !removed[y] {
                    degree[y] -= 1;
                    if degree[y] == 1 {
                        leaves.push(y);
                    }
                }
            }
        }
        let start = (0..k)
            .find(|&i| !removed[i])
            .expect("unicyclic component has a cycle");
        let mut current = start;
        let mut previous_edge = usize::MAX;
        loop {
            seen[current] = true;
            queue.push_back(current);
            let &(next, id) = adjacent[current]
                .iter()
                .find(|&&(y, id)| !removed[y] && id != previous_edge)
                .expect("cycle vertex has two cycle edges");
            oriented.push((id, vertices[next]));
            previous_edge = id;
            current = next;
            if current == start {
                break;
            }
        }
    }

    while let Some(x) = queue.pop_front() {
        for &(y, id) in &adjacent[x] {
            if !seen[y] {
                seen[y] = true;
                oriented.push((id, vertices[y]));
                queue.push_back(y);
            }
        }
    }
    debug_assert_eq!(oriented.len(), m);
    Ok(oriented)
}
