//! Compare the polynomial solvers with exhaustive search on random graphs.

use chore_orient::ef1::solve_ef1;
use chore_orient::efx::solve;
use chore_orient::hardness::{gen_random, RandomParams};
use chore_orient::oracle::{count_orientations, Criterion};

fn main() -> chore_orient::Result<()> {
    let params = RandomParams {
        vertices: 6,
        edges: 9,
        self_loop_fraction: 0.2,
        ..RandomParams::default()
    };
    let mut disagreements = 0;
    for seed in 0..200 {
        let g = gen_random(&params, seed)?;
        let ef1 = count_orientations(&g, Criterion::Ef1)?;
        let efx = count_orientations(&g, Criterion::Efx0)?;
        disagreements += usize::from(solve_ef1(&g)?.is_some() != (ef1 > 0));
        disagreements += usize::from(solve(&g)?.is_some() != (efx > 0));
        if seed < 5 {
            println!("seed {seed}: {ef1} EF1 and {efx} EFX0 orientations");
        }
    }
    println!("disagreements over 200 graphs: {disagreements}");
    Ok(())
}
