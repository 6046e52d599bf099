//! Ground-truth EF1 / EFX0 checks on arbitrary allocations, and exhaustive
//! search over orientations for small instances (multigraphs included).
//!
//! Utilities are additive, so for agent `i` with bundle `π_i`:
//!
//! * removing the chore `i` dislikes most is the best single removal, which
//!   decides EF1;
//! * removing the chore `i` dislikes least (possibly a zero-utility one) is
//!   the worst single removal, which decides EFX0.
//!
//! `u_i(π_j)` only sees edges of `π_j` that touch `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{ChoreInstance, Orientation, VertexId};

/// Largest number of non-loop edges [`enumerate_orientations`] accepts.
pub const ENUMERATION_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Ef1,
    Efx0,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Ef1 => "ef1",
            Criterion::Efx0 => "efx0",
        })
    }
}

impl FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ef1" => Ok(Criterion::Ef1),
            "efx0" | "efx" => Ok(Criterion::Efx0),
            other => Err(format!(
                "unknown criterion `{other}` (expected ef1 or efx0)"
            )),
        }
    }
}

/// Edge ids held by each agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    bundles: Vec<Vec<usize>>,
}

impl Allocation {
    pub fn new(bundles: Vec<Vec<usize>>) -> Self {
        Allocation { bundles }
    }

    pub fn from_orientation(orientation: &Orientation, vertex_count: usize) -> Self {
        Allocation {
            bundles: orientation.bundles(vertex_count),
        }
    }

    pub fn bundles(&self) -> &[Vec<usize>] {
        &self.bundles
    }

    /// One bundle per agent, bundles disjoint, every edge allocated.
    pub fn validate(&self, instance: &ChoreInstance) -> Result<()> {
        if self.bundles.len() != instance.vertex_count() {
            return Err(Error::BundleCount {
                found: self.bundles.len(),
                expected: instance.vertex_count(),
            });
        }
        let mut allocated = vec![false; instance.edge_count()];
        for &edge in self.bundles.iter().flatten() {
            instance.edge(edge)?;
            if std::mem::replace(&mut allocated[edge], true) {
                return Err(Error::DuplicateAllocation { edge });
            }
        }
        match allocated.iter().position(|&a| !a) {
            Some(edge) => Err(Error::UnallocatedEdge { edge }),
            None => Ok(()),
        }
    }
}

pub fn check_ef1(instance: &ChoreInstance, allocation: &Allocation) -> Result<bool> {
    check(instance, allocation, Criterion::Ef1)
}

pub fn check_efx0(instance: &ChoreInstance, allocation: &Allocation) -> Result<bool> {
    check(instance, allocation, Criterion::Efx0)
}

pub fn check(
    instance: &ChoreInstance,
    allocation: &Allocation,
    criterion: Criterion,
) -> Result<bool> {
    allocation.validate(instance)?;
    let holdings = allocation
        .bundles
        .iter()
        .enumerate()
        .flat_map(|(holder, bundle)| bundle.iter().map(move |&edge| (holder, edge)));
    Ok(Evaluator::default().passes(instance, holdings, criterion))
}

/// Validates `orientation` against `instance` and checks it.
pub fn check_orientation(
    instance: &ChoreInstance,
    orientation: &Orientation,
    criterion: Criterion,
) -> Result<bool> {
    instance.check_orientation(orientation)?;
    Ok(Evaluator::default().passes_orientation(instance, orientation.receivers(), criterion))
}

/// Every orientation of `instance` in lexicographic order: non-loop edges
/// in id order, each going to `u` before `v`. Self-loops are fixed.
pub struct OrientationSpace {
    free_edges: Vec<usize>,
    template: Vec<VertexId>,
    ends: Vec<(VertexId, VertexId)>,
}

impl OrientationSpace {
    pub fn new(instance: &ChoreInstance) -> Result<Self> {
        let free_edges: Vec<usize> = (0..instance.edge_count())
            .filter(|&e| !instance.edges()[e].is_self_loop())
            .collect();
        if free_edges.len() > ENUMERATION_LIMIT {
            return Err(Error::EnumerationLimit {
                edges: free_edges.len(),
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(OrientationSpace {
            free_edges,
            template: instance.edges().iter().map(|e| e.u).collect(),
            ends: instance.edges().iter().map(|e| (e.u, e.v)).collect(),
        })
    }

    pub fn len(&self) -> u64 {
        1u64 << self.free_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Writes orientation number `index` into `receivers`.
    pub fn fill(&self, index: u64, receivers: &mut Vec<VertexId>) {
        receivers.clone_from(&self.template);
        let m = self.free_edges.len();
        for (k, &edge) in self.free_edges.iter().enumerate() {
            if (index >> (m - 1 - k)) & 1 == 1 {
                receivers[edge] = self.ends[edge].1;
            }
        }
    }

    pub fn get(&self, index: u64) -> Orientation {
        let mut receivers = Vec::new();
        self.fill(index, &mut receivers);
        Orientation::from_receivers(receivers)
    }

    pub fn iter(&self) -> impl Iterator<Item = Orientation> + '_ {
        (0..self.len()).map(|index| self.get(index))
    }
}

/// The lexicographically first orientation passing `criterion`, if any.
pub fn enumerate_orientations(
    instance: &ChoreInstance,
    criterion: Criterion,
) -> Result<Option<Orientation>> {
    let space = OrientationSpace::new(instance)?;
    let mut evaluator = Evaluator::default();
    let mut receivers = Vec::new();
    for index in 0..space.len() {
        space.fill(index, &mut receivers);
        if evaluator.passes_orientation(instance, &receivers, criterion) {
            return Ok(Some(Orientation::from_receivers(receivers)));
        }
    }
    Ok(None)
}

/// Number of orientations passing `criterion`.
pub fn count_orientations(instance: &ChoreInstance, criterion: Criterion) -> Result<u64> {
    let space = OrientationSpace::new(instance)?;
    let mut evaluator = Evaluator::default();
    let mut receivers = Vec::new();
    let mut count = 0;
    for index in 0..space.len() {
        space.fill(index, &mut receivers);
        if evaluator.passes_orientation(instance, &receivers, criterion) {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy)]
struct AgentView {
    held: usize,
    own: i128,
    mildest: i64,
    harshest: i64,
    /// Highest value the agent puts on another agent's bundle.
    best_other: Option<i128>,
}

impl Default for AgentView {
    fn default() -> Self {
        AgentView {
            held: 0,
            own: 0,
            mildest: i64::MIN,
            harshest: i64::MAX,
            best_other: None,
        }
    }
}

#[derive(Default)]
struct Evaluator {
    views: Vec<AgentView>,
    /// `(agent, holder, utility to agent)` for edges held by someone else.
    seen_by: Vec<(usize, usize, i64)>,
}

impl Evaluator {
    fn passes_orientation(
        &mut self,
        instance: &ChoreInstance,
        receivers: &[VertexId],
        criterion: Criterion,
    ) -> bool {
        let holdings = receivers.iter().enumerate().map(|(edge, to)| (to.0, edge));
        self.passes(instance, holdings, criterion)
    }

    fn passes(
        &mut self,
        instance: &ChoreInstance,
        holdings: impl Iterator<Item = (usize, usize)>,
        criterion: Criterion,
    ) -> bool {
        let n = instance.vertex_count();
        self.views.clear();
        self.views.resize(n, AgentView::default());
        self.seen_by.clear();

        for (holder, id) in holdings {
            let edge = &instance.edges()[id];
            let utility = edge.utility_to(VertexId(holder));
            let view = &mut self.views[holder];
            view.held += 1;
            view.own += i128::from(utility);
            view.mildest = view.mildest.max(utility);
            view.harshest = view.harshest.min(utility);

            for end in [edge.u, edge.v] {
                if end.0 != holder {
                    self.seen_by.push((end.0, holder, edge.utility_to(end)));
                }
                if edge.is_self_loop() {
                    break;
                }
            }
        }

        self.seen_by.sort_unstable();
        let mut distinct_holders = vec![0usize; n];
        let mut k = 0;
        while k < self.seen_by.len() {
            let (agent, holder, _) = self.seen_by[k];
            let mut total = 0i128;
            while k < self.seen_by.len()
                && self.seen_by[k].0 == agent
                && self.seen_by[k].1 == holder
            {
                total += i128::from(self.seen_by[k].2);
                k += 1;
            }
            distinct_holders[agent] += 1;
            let best = &mut self.views[agent].best_other;
            *best = Some(best.map_or(total, |b| b.max(total)));
        }
        for (agent, view) in self.views.iter_mut().enumerate() {
            if n > 1 && distinct_holders[agent] < n - 1 {
                view.best_other = Some(view.best_other.map_or(0, |b| b.max(0)));
            }
        }

        self.views.iter().all(|view| {
            let Some(target) = view.best_other else {
                return true;
            };
            match criterion {
                Criterion::Ef1 => {
                    view.own >= target
                        || (view.held > 0 && view.own - i128::from(view.harshest) >= target)
                }
                Criterion::Efx0 => view.held == 0 || view.own - i128::from(view.mildest) >= target,
            }
        })
    }
}
