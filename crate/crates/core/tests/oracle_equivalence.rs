//! Solvers and the exhaustive oracle against the literal reference
//! implementations in `common`.

mod common;

use chore_orient::ef1::solve_ef1;
use chore_orient::efx::{plan_objective, solve, ObjectiveOutcome};
use chore_orient::hardness::{gen_random, RandomParams};
use chore_orient::oracle::{count_orientations, enumerate_orientations, Criterion};
use chore_orient::pd_cover::verify_cover;

#[test]
fn solvers_match_literal_brute_force() {
    let mut rng = common::rng(7);
    for case in 0..1500 {
        let g = common::small_instance(&mut rng, 6, 8, 0.5, 0.2);
        assert_eq!(
            solve_ef1(&g).unwrap().is_some(),
            common::naive_exists(&g, Criterion::Ef1),
            "EF1 case {case}\n{}",
            g.to_json()
        );
        assert_eq!(
            solve(&g).unwrap().is_some(),
            common::naive_exists(&g, Criterion::Efx0),
            "EFX0 case {case}\n{}",
            g.to_json()
        );
    }
}

#[test]
fn oracle_matches_literal_brute_force_on_multigraphs() {
    for seed in 0..600 {
        let params = RandomParams {
            vertices: 1 + (seed as usize % 4),
            edges: seed as usize % 9,
            self_loop_fraction: 0.2,
            multigraph: true,
            ..RandomParams::default()
        };
        let g = gen_random(&params, seed).unwrap();
        for criterion in [Criterion::Ef1, Criterion::Efx0] {
            let all = common::all_orientations(&g);
            let expected = all
                .iter()
                .filter(|r| common::naive_fair(&g, r, criterion))
                .count() as u64;
            assert_eq!(
                count_orientations(&g, criterion).unwrap(),
                expected,
                "seed {seed} {criterion}"
            );
            let witness = enumerate_orientations(&g, criterion).unwrap();
            assert_eq!(witness.is_some(), expected > 0);
            if let Some(o) = witness {
                assert!(common::naive_fair(&g, o.receivers(), criterion));
                // lexicographically first witness
                let first = all
                    .iter()
                    .find(|r| common::naive_fair(&g, r, criterion))
                    .unwrap();
                assert_eq!(o.receivers(), first.as_slice());
            }
        }
    }
}

#[test]
fn cover_search_matches_enumeration() {
    let mut rng = common::rng(11);
    let mut planned = 0;
    let mut with_cover = 0;
    while planned < 2000 {
        let g = common::small_instance(&mut rng, 8, 12, 1.0, 0.1);
        let ObjectiveOutcome::Planned(plan) = plan_objective(&g).unwrap() else {
            continue;
        };
        planned += 1;
        assert_eq!(
            plan.cover.is_some(),
            common::brute_force_cover_exists(&plan.pd),
            "{}",
            g.to_json()
        );
        if let Some(cover) = &plan.cover {
            with_cover += 1;
            assert!(verify_cover(&plan.pd, cover));
        }
    }
    assert!(
        with_cover > 200 && with_cover < 1900,
        "sample too one-sided: {with_cover}"
    );
}
