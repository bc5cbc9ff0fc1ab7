//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use condensa::scalars::Field;
use condensa::separability::{is_separable, SeparabilityWitness};
use condensa::structures::{catalog, load_fusion_algebra, AlgebraObject, FusionData};

pub fn load(data: &FusionData) -> Arc<AlgebraObject> {
    Arc::new(load_fusion_algebra(data).expect("catalog algebra"))
}

/// The pointed algebras over Z/2, Z/3 and Z/2 × Z/2 with their separability witnesses.
pub fn pointed() -> Vec<(Arc<AlgebraObject>, SeparabilityWitness)> {
    let q = Field::rationals();
    [catalog::vec_z2(&q), catalog::vec_z3(&Field::cyclotomic(3)), catalog::vec_z2xz2(&q)]
        .iter()
        .map(|d| {
            let alg = load(d);
            let sep = is_separable(&alg).expect("pointed algebras are separable in characteristic zero");
            (alg, sep)
        })
        .collect()
}
