//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Sample sizes, tolerances and seeds are fixed here so the run is
//! reproducible.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chore_orient::ef1::{ef1_structural_condition, solve_ef1};
use chore_orient::efx::{solve, structural_efx_condition};
use chore_orient::fixtures::two_negative_components;
use chore_orient::hardness::{
    gen_random, gen_three_vertex, gen_two_vertex, has_equipartition, PartitionInstance,
    RandomParams,
};
use chore_orient::instance::{ChoreInstance, Edge, Orientation, VertexId};
use chore_orient::oracle::{
    check_orientation, enumerate_orientations, Criterion, OrientationSpace,
};
use chore_orient::twosat::{Literal, TwoSatFormula};
use rand::Rng;

const SOLVER_INSTANCES: usize = 5000;
const STRUCTURAL_INSTANCES: usize = 500;
const TWOSAT_FORMULAS: usize = 10_000;
const PARTITIONS: usize = 500;
/// Allowed slowdown over the target running times.
const TIME_TOLERANCE: u32 = 5;
const EF1_TARGET: Duration = Duration::from_secs(1);
const EFX_TARGET: Duration = Duration::from_secs(10);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

/// Orientations seen while running the other criteria, for the EFX0 ⇒ EF1 check.
#[derive(Default)]
struct Examined {
    count: u64,
    violations: Vec<String>,
}

impl Examined {
    fn record(&mut self, instance: &ChoreInstance, orientation: &Orientation, label: &str) {
        self.count += 1;
        let efx = check_orientation(instance, orientation, Criterion::Efx0).unwrap();
        let ef1 = check_orientation(instance, orientation, Criterion::Ef1).unwrap();
        if efx && !ef1 && self.violations.len() < 5 {
            self.violations
                .push(format!("{label}: {:?}", orientation.receivers()));
        }
    }
}

fn solver_matches_oracle(criterion: Criterion, seed: u64, examined: &mut Examined) -> Outcome {
    let mut rng = common::rng(seed);
    let mut orientable = 0;
    for case in 0..SOLVER_INSTANCES {
        let instance = common::small_instance(&mut rng, 7, 10, 0.5, 0.2);
        let found = match criterion {
            Criterion::Ef1 => solve_ef1(&instance),
            Criterion::Efx0 => solve(&instance),
        }
        .unwrap();
        let expected = enumerate_orientations(&instance, criterion).unwrap();
        if found.is_some() != expected.is_some() {
            return fail(format!(
                "case {case}: solver says {}, oracle says {}\n{}",
                found.is_some(),
                expected.is_some(),
                instance.to_json()
            ));
        }
        if let Some(o) = &found {
            orientable += 1;
            examined.record(&instance, o, "solver output");
            let checked = check_orientation(&instance, o, criterion).unwrap();
            let literal = common::naive_fair(&instance, o.receivers(), criterion);
            if !checked || !literal {
                return fail(format!("case {case}: solver output is not {criterion}"));
            }
        }
        if let Some(o) = &expected {
            examined.record(&instance, o, "oracle witness");
        }
    }
    pass(format!(
        "{SOLVER_INSTANCES} instances agree, {orientable} orientable"
    ))
}

fn structural_matches_oracle(criterion: Criterion, seed: u64, examined: &mut Examined) -> Outcome {
    let mut rng = common::rng(seed);
    let objective_fraction = match criterion {
        Criterion::Efx0 => 1.0,
        Criterion::Ef1 => 0.5,
    };
    let mut checked = 0u64;
    for case in 0..STRUCTURAL_INSTANCES {
        let instance = common::small_instance(&mut rng, 5, 8, objective_fraction, 0.2);
        for o in OrientationSpace::new(&instance).unwrap().iter() {
            checked += 1;
            examined.record(&instance, &o, "exhaustive");
            let structural = match criterion {
                Criterion::Efx0 => structural_efx_condition(&instance, &o),
                Criterion::Ef1 => ef1_structural_condition(&instance, &o),
            }
            .unwrap();
            let direct = check_orientation(&instance, &o, criterion).unwrap();
            if structural != direct {
                return fail(format!(
                    "case {case}: structural {structural}, direct {direct} on {:?}\n{}",
                    o.receivers(),
                    instance.to_json()
                ));
            }
        }
    }
    pass(format!(
        "{STRUCTURAL_INSTANCES} instances, {checked} orientations agree"
    ))
}

fn twosat_matches_brute_force(seed: u64) -> Outcome {
    let mut rng = common::rng(seed);
    let mut satisfiable = 0;
    for case in 0..TWOSAT_FORMULAS {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=30);
        let mut formula = TwoSatFormula::new(n);
        for _ in 0..m {
            let a = Literal::new(rng.gen_range(0..n), rng.gen());
            let b = Literal::new(rng.gen_range(0..n), rng.gen());
            formula.add_clause(a, b).unwrap();
        }
        let expected = common::brute_force_satisfiable(&formula);
        match formula.solve() {
            Some(assignment) => {
                if !expected || !formula.is_satisfied_by(assignment.values()) {
                    return fail(format!(
                        "formula {case}: bad assignment {:?}",
                        formula.clauses()
                    ));
                }
                satisfiable += 1;
            }
            None if expected => {
                return fail(format!(
                    "formula {case}: missed a solution {:?}",
                    formula.clauses()
                ))
            }
            None => {}
        }
    }
    pass(format!(
        "{TWOSAT_FORMULAS} formulas agree, {satisfiable} satisfiable"
    ))
}

fn reductions_match_partition(seed: u64) -> Outcome {
    let mut rng = common::rng(seed);
    let mut yes = 0;
    let mut witnesses = 0u64;
    for case in 0..PARTITIONS {
        let k = rng.gen_range(1..=8);
        let values: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
        let partition = PartitionInstance::new(values.clone()).unwrap();
        let expected = has_equipartition(&partition).unwrap();
        yes += usize::from(expected);

        let checks = [
            (
                gen_two_vertex(&partition, Criterion::Ef1),
                Criterion::Ef1,
                "two-vertex EF1",
            ),
            (
                gen_two_vertex(&partition, Criterion::Efx0),
                Criterion::Efx0,
                "two-vertex EFX0",
            ),
            (
                gen_three_vertex(&partition),
                Criterion::Ef1,
                "three-vertex EF1",
            ),
        ];
        for (instance, criterion, name) in &checks {
            let found = enumerate_orientations(instance, *criterion)
                .unwrap()
                .is_some();
            if found != expected {
                return fail(format!(
                    "case {case} {values:?}: {name} says {found}, partition says {expected}"
                ));
            }
        }

        // every EF1 witness sends some c–a edge to a and some c–b edge to b
        let three = &checks[2].0;
        for o in OrientationSpace::new(three).unwrap().iter() {
            if !check_orientation(three, &o, Criterion::Ef1).unwrap() {
                continue;
            }
            witnesses += 1;
            let r = o.receivers();
            let a_side = r[k] == VertexId(0) || r[k + 1] == VertexId(0);
            let b_side = r[k + 2] == VertexId(1) || r[k + 3] == VertexId(1);
            if !a_side || !b_side {
                return fail(format!(
                    "case {case} {values:?}: witness {r:?} leaves c all its heavy edges"
                ));
            }
        }
    }
    pass(format!(
        "{PARTITIONS} partitions ({yes} splittable) agree on all three reductions; {witnesses} EF1 witnesses checked"
    ))
}

fn timed(
    label: &str,
    target: Duration,
    instance: &ChoreInstance,
    solver: fn(&ChoreInstance) -> chore_orient::Result<Option<Orientation>>,
) -> Outcome {
    let limit = target * TIME_TOLERANCE;
    let start = Instant::now();
    let result = solver(instance).unwrap();
    let elapsed = start.elapsed();
    let detail = format!(
        "{label}: {} vertices, {} edges in {:.3}s (limit {:.0}s), orientable {}",
        instance.vertex_count(),
        instance.edge_count(),
        elapsed.as_secs_f64(),
        limit.as_secs_f64(),
        result.is_some()
    );
    if elapsed <= limit {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// `n` vertices on a negative Hamiltonian cycle plus `n` random edges that
/// one endpoint values at zero; always EF1-orientable.
fn orientable_ef1_instance(n: usize, seed: u64) -> ChoreInstance {
    let mut rng = common::rng(seed);
    let mut edges: Vec<Edge> = (0..n)
        .map(|i| Edge::weighted(i, (i + 1) % n, -rng.gen_range(1..=3)))
        .collect();
    let mut used: HashSet<(usize, usize)> = (0..n)
        .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
        .collect();
    while edges.len() < 2 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && used.insert((a.min(b), a.max(b))) {
            edges.push(Edge::new(a, b, 0, -rng.gen_range(1..=3)));
        }
    }
    ChoreInstance::simple(n, edges).unwrap()
}

/// Blocks of four vertices joined by a negative path; the first vertex of
/// each block carries random dummy edges to other first vertices, filling
/// up to `2n` edges. Covering with the first vertices shows it is
/// EFX0-orientable.
fn orientable_efx_instance(n: usize, seed: u64) -> ChoreInstance {
    assert!(n.is_multiple_of(4));
    let mut rng = common::rng(seed);
    let mut edges = Vec::new();
    for block in (0..n).step_by(4) {
        for i in block..block + 3 {
            edges.push(Edge::weighted(i, i + 1, -rng.gen_range(1..=3)));
        }
    }
    let heads = n / 4;
    let mut used = HashSet::new();
    while edges.len() < 2 * n {
        let (a, b) = (rng.gen_range(0..heads) * 4, rng.gen_range(0..heads) * 4);
        if a != b && used.insert((a.min(b), a.max(b))) {
            edges.push(Edge::new(a, b, 0, 0));
        }
    }
    ChoreInstance::simple(n, edges).unwrap()
}

fn timing() -> Outcome {
    let random = |vertices, seed| {
        gen_random(
            &RandomParams {
                vertices,
                edges: 2 * vertices,
                ..RandomParams::default()
            },
            seed,
        )
        .unwrap()
    };
    let runs = [
        timed("EF1 random", EF1_TARGET, &random(100_000, 1), solve_ef1),
        timed(
            "EF1 orientable",
            EF1_TARGET,
            &orientable_ef1_instance(100_000, 3),
            solve_ef1,
        ),
        timed("EFX0 random", EFX_TARGET, &random(10_000, 2), solve),
        timed(
            "EFX0 orientable",
            EFX_TARGET,
            &orientable_efx_instance(10_000, 4),
            solve,
        ),
    ];
    Outcome {
        passed: runs.iter().all(|r| r.passed),
        detail: runs
            .iter()
            .map(|r| r.detail.as_str())
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn bundled_fixture() -> Outcome {
    let instance = two_negative_components();
    let report = instance.negative_components();
    let sizes: Vec<usize> = report.components.iter().map(|c| c.size()).collect();
    let solved = solve(&instance).unwrap();
    let oracle = enumerate_orientations(&instance, Criterion::Efx0).unwrap();
    if sizes == [4, 4] && solved.is_none() && oracle.is_none() {
        pass("two components of size 4; no EFX0 orientation, confirmed exhaustively")
    } else {
        fail(format!(
            "component sizes {sizes:?}, solver orientable {}, oracle orientable {}",
            solved.is_some(),
            oracle.is_some()
        ))
    }
}

fn main() -> ExitCode {
    let mut examined = Examined::default();
    let mut results: Vec<(&str, Outcome)> = vec![
        (
            "EFX0 solver agrees with exhaustive search",
            solver_matches_oracle(Criterion::Efx0, 101, &mut examined),
        ),
        (
            "EF1 solver agrees with exhaustive search",
            solver_matches_oracle(Criterion::Ef1, 102, &mut examined),
        ),
        (
            "EFX0 structural condition matches direct check",
            structural_matches_oracle(Criterion::Efx0, 103, &mut examined),
        ),
        (
            "EF1 structural condition matches direct check",
            structural_matches_oracle(Criterion::Ef1, 104, &mut examined),
        ),
        (
            "2SAT solver agrees with brute force",
            twosat_matches_brute_force(105),
        ),
        (
            "Partition reductions are faithful",
            reductions_match_partition(106),
        ),
        ("Solvers meet running-time targets", timing()),
        ("Bundled two-component instance", bundled_fixture()),
    ];
    let implication = if examined.violations.is_empty() {
        pass(format!(
            "{} orientations examined, none EFX0 without EF1",
            examined.count
        ))
    } else {
        fail(format!(
            "EFX0 but not EF1: {}",
            examined.violations.join("; ")
        ))
    };
    results.push(("EFX0 implies EF1", implication));

    let mut all_passed = true;
    for (name, outcome) in &results {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {}", outcome.detail);
        all_passed &= outcome.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
