//! Reference implementations used as test oracles. They follow the fairness
//! and cover definitions literally, trading speed for obviousness.

#![allow(dead_code)]

use chore_orient::hardness::{gen_random, RandomParams};
use chore_orient::instance::{ChoreInstance, Orientation, VertexId};
use chore_orient::oracle::Criterion;
use chore_orient::pd_cover::PdInstance;
use chore_orient::twosat::TwoSatFormula;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `u_i(S)` summed edge by edge.
pub fn utility(instance: &ChoreInstance, agent: usize, bundle: &[usize]) -> i64 {
    bundle
        .iter()
        .map(|&e| {
            let edge = &instance.edges()[e];
            if edge.u.0 == agent {
                edge.util_u
            } else if edge.v.0 == agent {
                edge.util_v
            } else {
                0
            }
        })
        .sum()
}

/// Checks every ordered pair of agents and, for EF1 / EFX0, every single
/// removal from the envious agent's bundle.
pub fn naive_fair(instance: &ChoreInstance, receivers: &[VertexId], criterion: Criterion) -> bool {
    let n = instance.vertex_count();
    let mut bundles = vec![Vec::new(); n];
    for (e, r) in receivers.iter().enumerate() {
        bundles[r.0].push(e);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let other = utility(instance, i, &bundles[j]);
            let without = |e: usize| {
                let rest: Vec<usize> = bundles[i].iter().copied().filter(|&f| f != e).collect();
                utility(instance, i, &rest)
            };
            let ok = match criterion {
                Criterion::Ef1 => {
                    utility(instance, i, &bundles[i]) >= other
                        || bundles[i].iter().any(|&e| without(e) >= other)
                }
                Criterion::Efx0 => bundles[i].iter().all(|&e| without(e) >= other),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// All `2^m` endpoint choices (self-loops have one) in lexicographic order:
/// edges in id order, `u` before `v`.
pub fn all_orientations(instance: &ChoreInstance) -> Vec<Vec<VertexId>> {
    let edges = instance.edges();
    let free: Vec<usize> = (0..edges.len())
        .filter(|&e| !edges[e].is_self_loop())
        .collect();
    assert!(free.len() <= 20, "too many edges for brute force");
    (0u64..1 << free.len())
        .map(|mask| {
            let mut receivers: Vec<VertexId> = edges.iter().map(|e| e.u).collect();
            for (k, &e) in free.iter().enumerate() {
                if mask >> (free.len() - 1 - k) & 1 == 1 {
                    receivers[e] = edges[e].v;
                }
            }
            receivers
        })
        .collect()
}

pub fn naive_exists(instance: &ChoreInstance, criterion: Criterion) -> bool {
    all_orientations(instance)
        .iter()
        .any(|r| naive_fair(instance, r, criterion))
}

pub fn brute_force_satisfiable(formula: &TwoSatFormula) -> bool {
    let n = formula.variable_count();
    (0u32..1 << n).any(|mask| {
        let values: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        formula.is_satisfied_by(&values)
    })
}

pub fn brute_force_cover_exists(pd: &PdInstance) -> bool {
    let n = pd.vertex_count();
    (0u32..1 << n).any(|mask| {
        let chosen = |v: VertexId| mask >> v.0 & 1 == 1;
        pd.graph()
            .edges()
            .iter()
            .all(|e| chosen(e.u) || chosen(e.v))
            && pd
                .groups()
                .iter()
                .all(|g| g.iter().filter(|&&v| chosen(v)).count() <= 1)
            && pd.forbidden().iter().all(|&v| !chosen(v))
    })
}

/// A random simple instance with at most `max_vertices` vertices and
/// `max_edges` edges; utilities in `-3..=0`.
pub fn small_instance(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
    objective_fraction: f64,
    self_loop_fraction: f64,
) -> ChoreInstance {
    let vertices = rng.gen_range(1..=max_vertices);
    let capacity = vertices * (vertices - 1) / 2 + vertices;
    let edges = rng.gen_range(0..=max_edges.min(capacity));
    let params = RandomParams {
        vertices,
        edges,
        max_disutility: 3,
        objective_fraction,
        self_loop_fraction,
        multigraph: false,
    };
    gen_random(&params, rng.gen()).expect("parameters fit a simple graph")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn orientation(receivers: &[usize]) -> Orientation {
    Orientation::from_receivers(receivers.iter().copied().map(VertexId).collect())
}
