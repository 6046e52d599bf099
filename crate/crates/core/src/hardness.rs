//! Instance generators: the multigraph reductions from Partition, and seeded
//! random instances for fuzzing and benchmarks.
//!
//! In both reductions an equipartition of the values exists exactly when the
//! generated multigraph has a fair orientation; only the exhaustive oracle
//! can decide these, since the polynomial solvers reject parallel edges.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{ChoreInstance, Edge};
use crate::oracle::Criterion;

/// Largest partition [`has_equipartition`] will search.
pub const EQUIPARTITION_LIMIT: usize = 30;

/// A multiset of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    values: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if values.contains(&0) {
            return Err(Error::NonPositivePartitionValue);
        }
        let total = values.iter().try_fold(0u64, |acc, &v| acc.checked_add(v));
        match total {
            Some(total) if total < i64::MAX as u64 => Ok(PartitionInstance { values }),
            _ => Err(Error::PartitionOverflow),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    fn max(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Two agents `a = 0`, `b = 1`; one `a`–`b` edge of weight `-s` per value and
/// a self-loop at each agent. The self-loops weigh `-(max s + 1)` for EF1 and
/// `0` for EFX0.
pub fn gen_two_vertex(partition: &PartitionInstance, variant: Criterion) -> ChoreInstance {
    let loop_weight = match variant {
        Criterion::Ef1 => -(partition.max() as i64) - 1,
        Criterion::Efx0 => 0,
    };
    let mut edges: Vec<Edge> = partition
        .values
        .iter()
        .map(|&s| Edge::weighted(0, 1, -(s as i64)))
        .collect();
    edges.push(Edge::self_loop(0, loop_weight));
    edges.push(Edge::self_loop(1, loop_weight));
    ChoreInstance::multigraph(2, edges).expect("two-vertex construction is a valid multigraph")
}

/// Three agents `a = 0`, `b = 1`, `c = 2`, no self-loops: one `a`–`b` edge of
/// weight `-s` per value, then two `a`–`c` and two `b`–`c` edges of weight `-T`
/// where `T` is the sum of the values.
pub fn gen_three_vertex(partition: &PartitionInstance) -> ChoreInstance {
    let total = partition.total() as i64;
    let mut edges: Vec<Edge> = partition
        .values
        .iter()
        .map(|&s| Edge::weighted(0, 1, -(s as i64)))
        .collect();
    edges.extend([
        Edge::weighted(0, 2, -total),
        Edge::weighted(0, 2, -total),
        Edge::weighted(1, 2, -total),
        Edge::weighted(1, 2, -total),
    ]);
    ChoreInstance::multigraph(3, edges).expect("three-vertex construction is a valid multigraph")
}

/// Whether the values split into two parts of equal sum. Meet-in-the-middle
/// over subset sums of each half.
pub fn has_equipartition(partition: &PartitionInstance) -> Result<bool> {
    let values = &partition.values;
    if values.len() > EQUIPARTITION_LIMIT {
        return Err(Error::PartitionTooLarge {
            len: values.len(),
            limit: EQUIPARTITION_LIMIT,
        });
    }
    let total = partition.total();
    if total % 2 == 1 {
        return Ok(false);
    }
    let half = total / 2;
    let (left, right) = values.split_at(values.len() / 2);
    let mut right_sums = subset_sums(right);
    right_sums.sort_unstable();
    Ok(subset_sums(left)
        .into_iter()
        .filter(|&s| s <= half)
        .any(|s| right_sums.binary_search(&(half - s)).is_ok()))
}

fn subset_sums(values: &[u64]) -> Vec<u64> {
    let mut sums = vec![0u64];
    for &v in values {
        let extended: Vec<u64> = sums.iter().map(|s| s + v).collect();
        sums.extend(extended);
    }
    sums
}

/// Parameters for [`gen_random`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomParams {
    pub vertices: usize,
    pub edges: usize,
    /// Non-zero utilities are drawn from `-max_disutility..=-1`.
    pub max_disutility: i64,
    /// Chance that a non-loop edge is objective (then dummy or negative with
    /// equal odds); otherwise exactly one endpoint values it at zero.
    pub objective_fraction: f64,
    /// Chance that an edge is a self-loop. A loop's utility is drawn from
    /// `-max_disutility..=0`.
    pub self_loop_fraction: f64,
    pub multigraph: bool,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            vertices: 5,
            edges: 6,
            max_disutility: 3,
            objective_fraction: 0.5,
            self_loop_fraction: 0.0,
            multigraph: false,
        }
    }
}

impl RandomParams {
    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InfeasibleParams(msg));
        if self.vertices == 0 {
            return fail("at least one vertex is required".into());
        }
        if self.max_disutility < 1 {
            return fail("max_disutility must be at least 1".into());
        }
        for (name, p) in [
            ("objective_fraction", self.objective_fraction),
            ("self_loop_fraction", self.self_loop_fraction),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return fail(format!("{name} must lie in [0, 1]"));
            }
        }
        if !self.multigraph {
            let n = self.vertices as u128;
            let capacity = n * (n - 1) / 2 + n;
            if self.edges as u128 > capacity {
                return fail(format!(
                    "{} edges do not fit in a simple graph on {} vertices",
                    self.edges, self.vertices
                ));
            }
        }
        Ok(())
    }
}

/// Seeded random instance; identical parameters and seed give identical output.
pub fn gen_random(params: &RandomParams, seed: u64) -> Result<ChoreInstance> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.vertices;
    let mut slots = SlotPicker::new(n, params.multigraph);
    let mut edges = Vec::with_capacity(params.edges);

    for _ in 0..params.edges {
        let want_loop = n == 1 || rng.gen_bool(params.self_loop_fraction);
        let (u, v) = slots.pick(&mut rng, want_loop);
        let edge = if u == v {
            Edge::self_loop(u, -rng.gen_range(0..=params.max_disutility))
        } else {
            let negative = |rng: &mut ChaCha8Rng| -rng.gen_range(1..=params.max_disutility);
            let (util_u, util_v) = if rng.gen_bool(params.objective_fraction) {
                if rng.gen_bool(0.5) {
                    (0, 0)
                } else {
                    (negative(&mut rng), negative(&mut rng))
                }
            } else {
                let beta = negative(&mut rng);
                if rng.gen_bool(0.5) {
                    (0, beta)
                } else {
                    (beta, 0)
                }
            };
            Edge::new(u, v, util_u, util_v)
        };
        edges.push(edge);
    }
    ChoreInstance::new(n, edges, params.multigraph)
}

/// Draws endpoint pairs, avoiding repeats for simple graphs.
struct SlotPicker {
    n: usize,
    multigraph: bool,
    used_pairs: HashSet<(usize, usize)>,
    used_loops: Vec<bool>,
    loops_left: usize,
}

impl SlotPicker {
    fn new(n: usize, multigraph: bool) -> Self {
        SlotPicker {
            n,
            multigraph,
            used_pairs: HashSet::new(),
            used_loops: vec![false; n],
            loops_left: n,
        }
    }

    fn pair_capacity(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn pick(&mut self, rng: &mut ChaCha8Rng, want_loop: bool) -> (usize, usize) {
        if self.multigraph {
            if want_loop || self.n == 1 {
                let v = rng.gen_range(0..self.n);
                return (v, v);
            }
            return self.random_pair(rng);
        }
        let pairs_left = self.pair_capacity() - self.used_pairs.len();
        let take_loop = (want_loop && self.loops_left > 0) || pairs_left == 0;
        if take_loop {
            let free: Vec<usize> = (0..self.n).filter(|&v| !self.used_loops[v]).collect();
            let v = *free
                .choose(rng)
                .expect("validated capacity leaves a free slot");
            self.used_loops[v] = true;
            self.loops_left -= 1;
            return (v, v);
        }
        let pair = if 2 * self.used_pairs.len() < self.pair_capacity() {
            loop {
                let pair = self.random_pair(rng);
                if !self.used_pairs.contains(&pair) {
                    break pair;
                }
            }
        } else {
            let free: Vec<(usize, usize)> = (0..self.n)
                .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
                .filter(|p| !self.used_pairs.contains(p))
                .collect();
            *free
                .choose(rng)
                .expect("validated capacity leaves a free slot")
        };
        self.used_pairs.insert(pair);
        if rng.gen_bool(0.5) {
            pair
        } else {
            (pair.1, pair.0)
        }
    }

    /// Uniform unordered pair of distinct vertices, smaller first.
    fn random_pair(&self, rng: &mut ChaCha8Rng) -> (usize, usize) {
        let a = rng.gen_range(0..self.n);
        let mut b = rng.gen_range(0..self.n - 1);
        if b >= a {
            b += 1;
        }
        (a.min(b), a.max(b))
    }
}
