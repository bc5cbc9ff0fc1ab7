use condensa::scalars::Field;
use condensa::separability::{check_separability, faithful, is_rigid, is_separable};
use condensa::structures::{build_fusion_algebra, catalog, load_fusion_algebra};
use condensa::Error;

#[test]
fn every_catalog_algebra_is_separable_in_characteristic_zero() {
    for data in catalog::all_fusion() {
        let alg = load_fusion_algebra(&data).unwrap();
        let w = is_separable(&alg).unwrap_or_else(|e| panic!("{}: {e}", data.name));
        assert!(check_separability(&alg, &w).passed());
        assert!(faithful(&alg));
    }
}

#[test]
fn graded_z3_is_separable_over_q_zeta3_but_not_over_gf3() {
    let ok = load_fusion_algebra(&catalog::vec_z3_graded(&Field::cyclotomic(3))).unwrap();
    assert!(is_separable(&ok).is_ok());
    let bad = load_fusion_algebra(&catalog::vec_z3_graded(&Field::prime(3))).unwrap();
    assert!(is_rigid(&bad).is_ok());
    assert!(matches!(is_separable(&bad), Err(Error::Infeasible(_))));
}

#[test]
fn graded_z2_over_gf3_stays_separable() {
    let alg = load_fusion_algebra(&catalog::vec_z2_graded(&Field::prime(3))).unwrap();
    assert!(is_separable(&alg).is_ok());
}

#[test]
fn zero_algebra_is_not_faithful() {
    let mut data = catalog::vec(&Field::rationals());
    data.name = "Zero".into();
    data.simples.clear();
    data.fusion.clear();
    data.unit.clear();
    let alg = build_fusion_algebra(&data).unwrap();
    assert_eq!(alg.rank(), 0);
    assert!(!faithful(&alg));
}
