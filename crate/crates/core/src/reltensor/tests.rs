use std::sync::Arc;

use super::*;
use crate::scalars::Field;
use crate::separability::is_separable;
use crate::structures::{catalog, load_fusion_algebra, FusionData};

fn setup(data: &FusionData) -> (Arc<AlgebraObject>, SeparabilityWitness) {
    let alg = Arc::new(load_fusion_algebra(data).unwrap());
    let sep = is_separable(&alg).unwrap();
    (alg, sep)
}

#[test]
fn vec_over_vec_is_vec() {
    let (alg, sep) = setup(&catalog::vec(&Field::rationals()));
    let (r, l) = (RightModule::regular(&alg), LeftModule::regular(&alg));
    let m = build_condensation_monad(&alg, &r, &l, &sep).unwrap();
    let report = verify_monad(&alg.field, &m);
    assert!(report.passed(), "{report}");
    let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
    assert_eq!(rt.object().rank(), 1);
}

#[test]
fn regular_over_regular_recovers_the_algebra_rank() {
    for data in [catalog::vec_z2(&Field::rationals()), catalog::vec_z2_omega(&Field::cyclotomic(4))] {
        let (alg, sep) = setup(&data);
        let (r, l) = (RightModule::regular(&alg), LeftModule::regular(&alg));
        let m = build_condensation_monad(&alg, &r, &l, &sep).unwrap();
        let report = verify_monad(&alg.field, &m);
        assert!(report.passed(), "{report}");
        let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
        assert_eq!(rt.object().rank(), alg.rank());
    }
}

#[test]
fn regular_balanced_map_factors_through_t() {
    let (alg, sep) = setup(&catalog::vec_z2(&Field::rationals()));
    let (r, l) = (RightModule::regular(&alg), LeftModule::regular(&alg));
    let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
    let m = Balanced1Morphism::new(r.clone(), l.clone(), alg.m.clone(), alg.mu.clone()).unwrap();
    let fac = factor_balanced(&rt, &m, "m̃").unwrap();
    assert!(fac.xi.is_invertible());
    let dims = Path::generator(&fac.h).dims();
    assert_eq!(dims.len(), 2);
}

#[test]
fn factoring_a_whiskered_cell_is_unique() {
    let (alg, sep) = setup(&catalog::vec_z2(&Field::rationals()));
    let (r, l) = (RightModule::regular(&alg), LeftModule::regular(&alg));
    let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
    let id = Path::identity(rt.object());
    let two = alg.field.from_i64(2);
    let gamma = TwoCell::identity(&alg.field, &rt.condensation.f).scale(&two);
    let (zeta, nullity) = factor_balanced_2cell(&rt, &id, &id, &gamma).unwrap();
    assert_eq!(nullity, 0);
    assert_eq!(zeta, TwoCell::identity(&alg.field, &id).scale(&two));
}

/// Number of conjugacy classes from a multiplication table; for a split
/// group algebra this is its number of simple blocks.
fn class_count(mul: &dyn Fn(usize, usize) -> usize, order: usize) -> usize {
    let inv =
        |g: usize| (0..order).find(|&h| mul(g, h) == mul(h, g) && (0..order).all(|x| mul(mul(g, h), x) == x)).unwrap();
    let mut seen = vec![false; order];
    let mut classes = 0;
    for g in 0..order {
        if seen[g] {
            continue;
        }
        classes += 1;
        for x in 0..order {
            seen[mul(mul(x, g), inv(x))] = true;
        }
    }
    classes
}

#[test]
fn vec_over_pointed_algebras_matches_conjugacy_class_count() {
    let z2 = |a: usize, b: usize| (a + b) % 2;
    let z3 = |a: usize, b: usize| (a + b) % 3;
    let v4 = |a: usize, b: usize| a ^ b;
    let cases: Vec<(FusionData, usize)> = vec![
        (catalog::vec_z2(&Field::rationals()), class_count(&z2, 2)),
        (catalog::vec_z3(&Field::cyclotomic(3)), class_count(&z3, 3)),
        (catalog::vec_z2xz2(&Field::rationals()), class_count(&v4, 4)),
    ];
    for (data, expected) in cases {
        let (alg, sep) = setup(&data);
        let r = catalog::vec_right_module(&alg).unwrap();
        let l = catalog::vec_left_module(&alg).unwrap();
        let m = build_condensation_monad(&alg, &r, &l, &sep).unwrap();
        assert!(verify_monad(&alg.field, &m).passed());
        let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
        assert_eq!(rt.object().rank(), expected, "{}", alg.name);
    }
}

#[test]
fn fibonacci_regular_tensor_has_rank_two() {
    let (alg, sep) = setup(&catalog::fibonacci());
    let (r, l) = (RightModule::regular(&alg), LeftModule::regular(&alg));
    let m = build_condensation_monad(&alg, &r, &l, &sep).unwrap();
    let report = verify_monad(&alg.field, &m);
    assert!(report.passed(), "{report}");
    let rt = relative_tensor(&alg, &r, &l, &sep, "T").unwrap();
    assert_eq!(rt.object().rank(), 2);
}

#[test]
fn identity_bimodules_tensor_to_a_bimodule_of_the_same_rank() {
    let (alg, sep) = setup(&catalog::vec_z2(&Field::rationals()));
    let id = crate::structures::Bimodule::identity(&alg);
    let bt = bimodule_tensor(&id, &id, &sep, "T").unwrap();
    assert_eq!(bt.bimodule.carrier().rank(), 2);
}

#[test]
fn column_times_row_over_vec_has_rank_four() {
    let q = Field::rationals();
    let (v, sep) = setup(&catalog::vec(&q));
    let mat = Arc::new(load_fusion_algebra(&catalog::mat2(&q)).unwrap());
    let col = catalog::column_bimodule(&mat, &v).unwrap();
    let row = catalog::row_bimodule(&v, &mat).unwrap();
    let bt = bimodule_tensor(&col, &row, &sep, "T").unwrap();
    assert_eq!(bt.bimodule.carrier().rank(), 4);
    let sep_m = is_separable(&mat).unwrap();
    let bt = bimodule_tensor(&row, &col, &sep_m, "S").unwrap();
    assert_eq!(bt.bimodule.carrier().rank(), 1);
}

#[test]
fn unitors_of_the_identity_bimodule_are_equivalences() {
    for data in [catalog::vec_z2(&Field::rationals()), catalog::vec_z2_omega(&Field::cyclotomic(4))] {
        let (alg, sep) = setup(&data);
        let id = crate::structures::Bimodule::identity(&alg);
        let l = l_cell(&id, &sep).unwrap();
        assert!(l.verified(), "{}", l.report);
        let r = r_cell(&id, &sep).unwrap();
        assert!(r.verified(), "{}", r.report);
    }
}

#[test]
fn associator_of_identity_bimodules_is_an_equivalence() {
    let (alg, sep) = setup(&catalog::vec_z2(&Field::rationals()));
    let id = crate::structures::Bimodule::identity(&alg);
    let a = alpha_cell(&id, &id, &id, &sep, &sep).unwrap();
    assert!(a.verified(), "{}", a.report);
}
