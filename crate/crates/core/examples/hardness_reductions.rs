//! Partition instances turned into multigraphs whose fair orientations
//! correspond to equal-sum splits, decided by exhaustive search.

use chore_orient::hardness::{
    gen_three_vertex, gen_two_vertex, has_equipartition, PartitionInstance,
};
use chore_orient::oracle::{enumerate_orientations, Criterion};

fn main() -> chore_orient::Result<()> {
    for values in [vec![3, 1, 1, 2, 2, 1], vec![2, 2, 3]] {
        let partition = PartitionInstance::new(values.clone())?;
        println!(
            "{values:?}: splits evenly = {}",
            has_equipartition(&partition)?
        );
        let two_ef1 = gen_two_vertex(&partition, Criterion::Ef1);
        let two_efx = gen_two_vertex(&partition, Criterion::Efx0);
        let three = gen_three_vertex(&partition);
        println!(
            "  two agents, EF1:    {}",
            enumerate_orientations(&two_ef1, Criterion::Ef1)?.is_some()
        );
        println!(
            "  two agents, EFX0:   {}",
            enumerate_orientations(&two_efx, Criterion::Efx0)?.is_some()
        );
        println!(
            "  three agents, EF1:  {}",
            enumerate_orientations(&three, Criterion::Ef1)?.is_some()
        );
    }
    Ok(())
}
