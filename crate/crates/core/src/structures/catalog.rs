//! Built-in examples: pointed categories with and without a cocycle,
//! Fibonacci, and two multifusion algebras.

use std::sync::Arc;

use super::fusion::FusionData;
use super::types::{AlgebraObject, Bimodule, Entries, LeftModule, RightModule};
use crate::ambient::{FiniteGroup, Generator, TwoObject, Wire};
use crate::error::Result;
use crate::scalars::{Field, FieldElement, FieldSpec};

/// `Vec_G^ω` for a normalized 3-cocycle `ω`, optionally graded by `G`.
pub fn pointed<F>(name: &str, field: &Field, group: &FiniteGroup, graded: bool, omega: F) -> FusionData
where
    F: Fn(u32, u32, u32) -> FieldElement,
{
    let n = group.order() as u32;
    let mut fusion = Vec::new();
    for a in 0..n {
        for b in 0..n {
            fusion.push((a, b, group.mul(a as usize, b as usize) as u32, 1));
        }
    }
    let mut mu = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = group.mul(a as usize, b as usize) as u32;
                let bc = group.mul(b as usize, c as usize) as u32;
                let d = group.mul(ab as usize, c as usize) as u32;
                let v = omega(a, b, c);
                if !v.is_one() {
                    mu.push((vec![a, b, c, 0, ab, 0, d], vec![a, b, c, 0, bc, 0, d], v));
                }
            }
        }
    }
    FusionData {
        name: name.into(),
        field: field.clone(),
        simples: (0..n).map(|g| if g == 0 { "1".to_string() } else { format!("g{g}") }).collect(),
        grading: graded.then(|| (Arc::new(group.clone()), (0..n).collect())),
        unit: vec![0],
        fusion,
        mu,
        mu_default: Some(field.one()),
        lambda: Vec::new(),
        rho: Vec::new(),
    }
}

pub fn vec(field: &Field) -> FusionData {
    pointed("Vec", field, &FiniteGroup::cyclic(1), false, |_, _, _| field.one())
}

pub fn vec_z2(field: &Field) -> FusionData {
    pointed("VecZ2", field, &FiniteGroup::cyclic(2), false, |_, _, _| field.one())
}

/// `Vec_{Z/2}` inside `2Vect_{Z/2}`: the simple `g` sits in degree `g`.
pub fn vec_z2_graded(field: &Field) -> FusionData {
    pointed("VecZ2", field, &FiniteGroup::cyclic(2), true, |_, _, _| field.one())
}

pub fn vec_z3_graded(field: &Field) -> FusionData {
    pointed("VecZ3", field, &FiniteGroup::cyclic(3), true, |_, _, _| field.one())
}

/// `Vec_{Z/2}` twisted by the cocycle with `ω(g, g, g) = −1`.
pub fn vec_z2_omega(field: &Field) -> FusionData {
    let minus = -field.one();
    pointed("VecZ2omega", field, &FiniteGroup::cyclic(2), false, move |a, b, c| {
        if a == 1 && b == 1 && c == 1 {
            minus.clone()
        } else {
            minus.field().one()
        }
    })
}

pub fn vec_z3(field: &Field) -> FusionData {
    pointed("VecZ3", field, &FiniteGroup::cyclic(3), false, |_, _, _| field.one())
}

pub fn vec_z2xz2(field: &Field) -> FusionData {
    let g = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    pointed("VecZ2xZ2", field, &g, false, |_, _, _| field.one())
}

/// The golden ratio `1 + ζ + ζ⁴` in `ℚ(ζ_5)`.
pub fn golden_ratio(field: &Field) -> FieldElement {
    field.one() + field.zeta_pow(1).expect("ζ") + field.zeta_pow(4).expect("ζ⁴")
}

/// Fibonacci category over `ℚ(ζ_5)`, in a gauge where every associator entry lies in `ℚ(φ)`.
pub fn fibonacci() -> FusionData {
    let field = Field::cyclotomic(5);
    let phi = golden_ratio(&field);
    let phi_inv = phi.inv().expect("φ ≠ 0");
    let (one, tau) = (0u32, 1u32);
    let fusion =
        vec![(one, one, one, 1), (one, tau, tau, 1), (tau, one, tau, 1), (tau, tau, one, 1), (tau, tau, tau, 1)];
    // F^{τττ}_τ, indexed by the intermediate simple (1, τ) on each side
    let f = [[phi_inv.clone(), field.one()], [phi_inv.clone(), -phi_inv.clone()]];
    let mut mu = Vec::new();
    for e in [one, tau] {
        for g in [one, tau] {
            mu.push((
                vec![tau, tau, tau, 0, e, 0, tau],
                vec![tau, tau, tau, 0, g, 0, tau],
                f[e as usize][g as usize].clone(),
            ));
        }
    }
    FusionData {
        name: "Fib".into(),
        field: field.clone(),
        simples: vec!["1".into(), "tau".into()],
        grading: None,
        unit: vec![one],
        fusion,
        mu,
        mu_default: Some(field.one()),
        lambda: Vec::new(),
        rho: Vec::new(),
    }
}

/// `Vec × Vec`: two orthogonal idempotent simples whose sum is the unit.
pub fn vec_x_vec(field: &Field) -> FusionData {
    FusionData {
        name: "VecxVec".into(),
        field: field.clone(),
        simples: vec!["e1".into(), "e2".into()],
        grading: None,
        unit: vec![0, 1],
        fusion: vec![(0, 0, 0, 1), (1, 1, 1, 1)],
        mu: Vec::new(),
        mu_default: Some(field.one()),
        lambda: Vec::new(),
        rho: Vec::new(),
    }
}

/// Endomorphisms of a rank-2 object of 2Vect: simples `E_ij` with `E_ij ⊗ E_jk = E_ik`.
pub fn mat2(field: &Field) -> FusionData {
    let idx = |i: u32, j: u32| 2 * i + j;
    let mut fusion = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                fusion.push((idx(i, j), idx(j, k), idx(i, k), 1));
            }
        }
    }
    FusionData {
        name: "Mat2".into(),
        field: field.clone(),
        simples: vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
        grading: None,
        unit: vec![idx(0, 0), idx(1, 1)],
        fusion,
        mu: Vec::new(),
        mu_default: Some(field.one()),
        lambda: Vec::new(),
        rho: Vec::new(),
    }
}

/// Every fusion example with the field it is meant to be used over.
pub fn all_fusion() -> Vec<FusionData> {
    let q = Field::rationals();
    let c3 = Field::cyclotomic(3);
    let c4 = Field::cyclotomic(4);
    vec![vec(&q), vec_z2(&q), vec_z2_omega(&c4), vec_z3(&c3), vec_z2xz2(&q), fibonacci(), vec_x_vec(&q), mat2(&q)]
}

/// The field of an example by name, for documents that omit it.
pub fn default_field(name: &str) -> Option<FieldSpec> {
    all_fusion().into_iter().find(|d| d.name == name).map(|d| d.field.spec())
}

pub(crate) fn trivial_cells(field: &Field, src: &crate::ambient::Path, tgt: &crate::ambient::Path) -> Entries {
    let mut out = Vec::new();
    for s in src.configs() {
        let (a, b) = (src.source_labels(&s).to_vec(), src.target_labels(&s));
        for t in tgt.configs_from(&a) {
            if tgt.target_labels(&t) == b {
                out.push((s.clone(), t, field.one()));
            }
        }
    }
    out
}

/// Vec as a right module over a pointed algebra: every simple acts as the identity.
/// All structure cells are 1.
pub fn vec_right_module(algebra: &Arc<AlgebraObject>) -> Result<RightModule> {
    let f = &algebra.field;
    let v = TwoObject::single(Wire::new("V", 1));
    let n = Generator::new(
        "n",
        v.boxed(&algebra.a),
        v.clone(),
        (0..algebra.rank() as u32).map(|g| (vec![0, g], vec![0], 1)),
    )?;
    let tmp = RightModule::from_entries("VecModule", algebra, n.clone(), Vec::new(), Vec::new())?;
    let nu = trivial_cells(f, &tmp.n_n1()?, &tmp.n_1m()?);
    let rho = trivial_cells(f, &tmp.n_1i()?, &crate::ambient::Path::identity(&v));
    RightModule::from_entries("VecModule", algebra, n, nu, rho)
}

/// Vec as a left module over a pointed algebra.
pub fn vec_left_module(algebra: &Arc<AlgebraObject>) -> Result<LeftModule> {
    let f = &algebra.field;
    let v = TwoObject::single(Wire::new("V", 1));
    let l = Generator::new(
        "l",
        algebra.a.boxed(&v),
        v.clone(),
        (0..algebra.rank() as u32).map(|g| (vec![g, 0], vec![0], 1)),
    )?;
    let tmp = LeftModule::from_entries("VecModule", algebra, l.clone(), Vec::new(), Vec::new())?;
    let kappa = trivial_cells(f, &tmp.l_m1()?, &tmp.l_1l()?);
    let lambda = trivial_cells(f, &tmp.l_i1()?, &crate::ambient::Path::identity(&v));
    LeftModule::from_entries("VecModule", algebra, l, kappa, lambda)
}

/// Column vectors: a `Mat2`-`Vec` bimodule of rank 2 with `E_ij ⊗ c_j = c_i`.
pub fn column_bimodule(mat2: &Arc<AlgebraObject>, vec: &Arc<AlgebraObject>) -> Result<Bimodule> {
    let f = &mat2.field;
    let c = TwoObject::single(Wire::new("C", 2));
    let mut l_entries = Vec::new();
    for i in 0..2u32 {
        for j in 0..2u32 {
            l_entries.push((vec![2 * i + j, j], vec![i], 1));
        }
    }
    let l = Generator::new("l", mat2.a.boxed(&c), c.clone(), l_entries)?;
    let n = Generator::new("n", c.boxed(&vec.a), c.clone(), (0..2).map(|i| (vec![i, 0], vec![i], 1)))?;
    trivial_bimodule("Column", mat2, vec, l, n, f)
}

/// Row vectors: a `Vec`-`Mat2` bimodule of rank 2 with `r_i ⊗ E_ij = r_j`.
pub fn row_bimodule(vec: &Arc<AlgebraObject>, mat2: &Arc<AlgebraObject>) -> Result<Bimodule> {
    let f = &mat2.field;
    let r = TwoObject::single(Wire::new("R", 2));
    let mut n_entries = Vec::new();
    for i in 0..2u32 {
        for j in 0..2u32 {
            n_entries.push((vec![i, 2 * i + j], vec![j], 1));
        }
    }
    let n = Generator::new("n", r.boxed(&mat2.a), r.clone(), n_entries)?;
    let l = Generator::new("l", vec.a.boxed(&r), r.clone(), (0..2).map(|i| (vec![0, i], vec![i], 1)))?;
    trivial_bimodule("Row", vec, mat2, l, n, f)
}

/// A bimodule whose every structure block is 1×1 with entry 1.
pub fn trivial_bimodule(
    name: &str,
    left_alg: &Arc<AlgebraObject>,
    right_alg: &Arc<AlgebraObject>,
    l: crate::ambient::Gen,
    n: crate::ambient::Gen,
    f: &Field,
) -> Result<Bimodule> {
    let carrier = l.target().clone();
    let lt = LeftModule::from_entries(name, left_alg, l.clone(), Vec::new(), Vec::new())?;
    let kappa = trivial_cells(f, &lt.l_m1()?, &lt.l_1l()?);
    let lam = trivial_cells(f, &lt.l_i1()?, &crate::ambient::Path::identity(&carrier));
    let left = LeftModule::from_entries(name, left_alg, l, kappa, lam)?;
    let rt = RightModule::from_entries(name, right_alg, n.clone(), Vec::new(), Vec::new())?;
    let nu = trivial_cells(f, &rt.n_n1()?, &rt.n_1m()?);
    let rho = trivial_cells(f, &rt.n_1i()?, &crate::ambient::Path::identity(&carrier));
    let right = RightModule::from_entries(name, right_alg, n, nu, rho)?;
    let tmp = Bimodule::from_entries(name, left.clone(), right.clone(), Vec::new())?;
    let beta = trivial_cells(f, &tmp.n_l1()?, &tmp.l_1n()?);
    Bimodule::from_entries(name, left, right, beta)
}

/// Left `k[G]`-modules in a pointed algebra with trivial associator, as a right module.
pub fn group_algebra_right_module(algebra: &Arc<AlgebraObject>) -> Result<RightModule> {
    let b = super::InternalAlgebra::group_algebra(algebra)?;
    super::module_from_internal_algebra(&b, &format!("Mod({})", b.name))
}

/// Right `k[G]`-modules in a pointed algebra with trivial associator, as a left module.
pub fn group_algebra_left_module(algebra: &Arc<AlgebraObject>) -> Result<LeftModule> {
    let b = super::InternalAlgebra::group_algebra(algebra)?;
    super::left_module_from_internal_algebra(&b, &format!("Mod({})", b.name))
}
