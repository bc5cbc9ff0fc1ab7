use condensa::scalars::{
    decompose_semisimple_algebra, parse_scalar, solve_linear, AssocAlgebra, Field, FieldElement, ScalarMatrix,
};
use condensa::Error;
use proptest::prelude::*;

/// Group algebra of a finite group given by its multiplication table.
fn group_algebra(field: &Field, table: &[Vec<usize>]) -> AssocAlgebra {
    let n = table.len();
    let products = (0..n * n).map(|ij| vec![(table[ij / n][ij % n], field.one())]).collect();
    AssocAlgebra::from_products(field, n, products).unwrap()
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

fn klein() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

fn matrix_algebra(field: &Field, n: usize) -> AssocAlgebra {
    // basis E_ij at index i*n+j
    let d = n * n;
    let products = (0..d * d)
        .map(|xy| {
            let (x, y) = (xy / d, xy % d);
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            if j == k {
                vec![(i * n + l, field.one())]
            } else {
                vec![]
            }
        })
        .collect();
    AssocAlgebra::from_products(field, d, products).unwrap()
}

/// Oracle: enumerate elements with coefficients in {-1, -1/2, 0, 1/2, 1} and keep
/// the central idempotents; the primitive ones are those that are not sums of two
/// other nonzero ones.
fn brute_force_primitive_central_idempotents(a: &AssocAlgebra) -> Vec<Vec<FieldElement>> {
    let k = a.field();
    let vals: Vec<FieldElement> = ["-1", "-1/2", "0", "1/2", "1"].iter().map(|s| parse_scalar(k, s).unwrap()).collect();
    let dim = a.dim();
    let mut found = Vec::new();
    let mut idx = vec![0usize; dim];
    loop {
        let x: Vec<FieldElement> = idx.iter().map(|&i| vals[i].clone()).collect();
        let nonzero = x.iter().any(|v| !v.is_zero());
        if nonzero && a.mul(&x, &x) == x {
            let central = (0..dim).all(|i| {
                let e = a.basis_vector(i);
                a.mul(&x, &e) == a.mul(&e, &x)
            });
            if central {
                found.push(x);
            }
        }
        let mut p = 0;
        loop {
            if p == dim {
                let f = found.clone();
                return f
                    .iter()
                    .filter(|x| {
                        !f.iter().any(|y| {
                            y != *x && {
                                let prod = a.mul(x, y);
                                prod == **y
                            }
                        })
                    })
                    .cloned()
                    .collect();
            }
            idx[p] += 1;
            if idx[p] < vals.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[test]
fn full_matrix_algebra_is_one_block() {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let oracle = brute_force_primitive_central_idempotents(&m2);
    assert_eq!(oracle.len(), 1);
    let w = decompose_semisimple_algebra(&m2).unwrap();
    assert_eq!(w.block_dims(), vec![2]);
    assert_eq!(w.blocks[0].idempotent, oracle[0]);
}

#[test]
fn product_of_two_copies_of_the_field() {
    let q = Field::rationals();
    let kk = AssocAlgebra::from_products(&q, 2, vec![vec![(0, q.one())], vec![], vec![], vec![(1, q.one())]]).unwrap();
    let mut oracle = brute_force_primitive_central_idempotents(&kk);
    oracle.sort();
    let w = decompose_semisimple_algebra(&kk).unwrap();
    assert_eq!(w.block_dims(), vec![1, 1]);
    let mut got: Vec<_> = w.blocks.iter().map(|b| b.idempotent.clone()).collect();
    got.sort();
    assert_eq!(got, oracle);
}

#[test]
fn group_algebra_of_z2_over_q() {
    let q = Field::rationals();
    let a = group_algebra(&q, &cyclic(2));
    let w = decompose_semisimple_algebra(&a).unwrap();
    let half = parse_scalar(&q, "1/2").unwrap();
    let mhalf = parse_scalar(&q, "-1/2").unwrap();
    // Character theory: e_± = (1 ± g)/2, ordered lexicographically.
    assert_eq!(w.num_blocks(), 2);
    assert_eq!(w.blocks[0].idempotent, vec![half.clone(), mhalf]);
    assert_eq!(w.blocks[1].idempotent, vec![half.clone(), half]);
}

#[test]
fn abelian_group_algebras_split_into_characters() {
    for n in 1..=6usize {
        let k = Field::cyclotomic(n as u32);
        let w = decompose_semisimple_algebra(&group_algebra(&k, &cyclic(n))).unwrap();
        assert_eq!(w.num_blocks(), n, "Z/{n}");
        assert!(w.block_dims().iter().all(|&d| d == 1));
    }
    let k = Field::cyclotomic(4);
    assert_eq!(decompose_semisimple_algebra(&group_algebra(&k, &klein())).unwrap().num_blocks(), 4);
}

#[test]
fn symmetric_group_s3_has_a_two_dimensional_block() {
    // S3 as permutations of {0,1,2}
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> =
        perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
    let q = Field::rationals();
    let w = decompose_semisimple_algebra(&group_algebra(&q, &table)).unwrap();
    assert_eq!(w.block_dims(), vec![1, 1, 2]);
}

#[test]
fn recombination_reproduces_structure_constants() {
    let k = Field::cyclotomic(3);
    let a = group_algebra(&k, &cyclic(3));
    let w = decompose_semisimple_algebra(&a).unwrap();
    let p = &w.change_of_basis;
    let pinv = p.inverse().unwrap();
    // In the new basis the product is matrix-unit multiplication; map back.
    let mut labels = Vec::new();
    for (b, blk) in w.blocks.iter().enumerate() {
        for i in 0..blk.block_dim {
            for j in 0..blk.block_dim {
                labels.push((b, i, j));
            }
        }
    }
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            let cx = pinv.column(x);
            let cy = pinv.column(y);
            let mut new = vec![k.zero(); n];
            for (s, &(b1, i, j)) in labels.iter().enumerate() {
                for (t, &(b2, kk, l)) in labels.iter().enumerate() {
                    if b1 == b2 && j == kk {
                        let u = labels.iter().position(|&z| z == (b1, i, l)).unwrap();
                        new[u] = &new[u] + &(&cx[s] * &cy[t]);
                    }
                }
            }
            let back = p.mul_vec(&new).unwrap();
            assert_eq!(back, a.mul(&a.basis_vector(x), &a.basis_vector(y)));
        }
    }
}

#[test]
fn non_split_center_reports_minimal_polynomial() {
    let q = Field::rationals();
    match decompose_semisimple_algebra(&group_algebra(&q, &cyclic(3))) {
        Err(Error::NotSplitOverField { min_poly, .. }) => assert!(min_poly.contains("x^2"), "{min_poly}"),
        other => panic!("expected NotSplitOverField, got {other:?}"),
    }
}

#[test]
fn radicals_are_detected() {
    let q = Field::rationals();
    // upper triangular 2x2: basis E11, E12, E22
    let one = q.one();
    let prods = vec![
        vec![(0, one.clone())],
        vec![(1, one.clone())],
        vec![],
        vec![],
        vec![],
        vec![(1, one.clone())],
        vec![],
        vec![],
        vec![(2, one.clone())],
    ];
    let t = AssocAlgebra::from_products(&q, 3, prods).unwrap();
    assert!(matches!(decompose_semisimple_algebra(&t), Err(Error::NotSemisimple(_))));
    let gf2 = Field::prime(2);
    assert!(matches!(decompose_semisimple_algebra(&group_algebra(&gf2, &cyclic(2))), Err(Error::NotSemisimple(_))));
    let gf3 = Field::prime(3);
    assert!(matches!(decompose_semisimple_algebra(&group_algebra(&gf3, &cyclic(3))), Err(Error::NotSemisimple(_))));
    // GF(3)[Z/2] is semisimple and split
    assert_eq!(decompose_semisimple_algebra(&group_algebra(&gf3, &cyclic(2))).unwrap().num_blocks(), 2);
}

fn element(k: &Field) -> impl Strategy<Value = FieldElement> {
    let k = k.clone();
    let deg = k.degree();
    proptest::collection::vec((-6i64..6, 1i64..5), deg).prop_map(move |cs| {
        let lit: Vec<String> = cs.iter().enumerate().map(|(j, (n, d))| format!("({n}/{d})*z^{j}")).collect();
        parse_scalar(&k, &lit.join("+")).unwrap()
    })
}

fn gf_element(p: u64) -> impl Strategy<Value = FieldElement> {
    let k = Field::prime(p);
    (0..p as i64).prop_map(move |v| k.from_i64(v))
}

proptest! {
    #[test]
    fn cyclotomic_field_axioms(a in element(&Field::cyclotomic(5)), b in element(&Field::cyclotomic(5)), c in element(&Field::cyclotomic(5))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn prime_field_axioms(a in gf_element(7), b in gf_element(7), c in gf_element(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn literal_roundtrip(a in element(&Field::cyclotomic(12))) {
        prop_assert_eq!(parse_scalar(a.field(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn solve_roundtrip(entries in proptest::collection::vec(-3i64..4, 12), x in proptest::collection::vec(-3i64..4, 4)) {
        let q = Field::rationals();
        let rows: Vec<Vec<FieldElement>> = entries.chunks(4).map(|r| r.iter().map(|&v| q.from_i64(v)).collect()).collect();
        let a = ScalarMatrix::from_rows(&q, rows).unwrap();
        let xv: Vec<FieldElement> = x.iter().map(|&v| q.from_i64(v)).collect();
        let b = a.mul_vec(&xv).unwrap();
        let sol = solve_linear(&a, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&sol.particular).unwrap(), b);
        for k in &sol.kernel {
            prop_assert!(a.mul_vec(k).unwrap().iter().all(|v| v.is_zero()));
        }
        prop_assert_eq!(sol.kernel.len(), 4 - a.rank());
    }
}
