use super::*;
use crate::scalars::Field;
use crate::structures::{catalog, load_fusion_algebra};

#[test]
fn heap_enumerates_every_permutation_once() {
    let perms = permutations(4);
    assert_eq!(perms.len(), 24);
    let mut sorted = perms.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 24);
}

#[test]
fn permutation_matrices_are_recognized() {
    assert!(is_permutation(&[vec![0, 1], vec![1, 0]]));
    assert!(!is_permutation(&[vec![1, 1], vec![0, 0]]));
    assert!(!is_permutation(&[vec![2]]));
}

#[test]
fn identity_data_passes_for_the_twisted_algebra() {
    let alg = Arc::new(load_fusion_algebra(&catalog::vec_z2_omega(&Field::cyclotomic(4))).unwrap());
    let id = identity_bimodule(&alg);
    let d = MoritaData::identity(&alg).unwrap();
    let cert = check_morita_witness(&id, &id, &d, &d).unwrap_or_else(|r| panic!("{r}"));
    assert!(cert.reverify());
}

#[test]
fn tube_algebra_of_vec_is_the_field() {
    let alg = load_fusion_algebra(&catalog::vec(&Field::rationals())).unwrap();
    let tube = TubeAlgebra::new(&alg).unwrap();
    assert_eq!(tube.dim(), 1);
    assert!(tube.twist_is_central());
}
