//! Morita theory of separable algebras: identity bimodules, certified
//! Morita equivalences, the Eilenberg–Watts roundtrip, indecomposability
//! and the center of the unit bimodule.

mod tube;

use std::sync::Arc;

pub use tube::{center_rank, CenterBlock, CenterData, TubeAlgebra};

use crate::ambient::{adjoint1, CellProblem, Gen, Generator, Path, Rewrite, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::reltensor::{bimodule_tensor, factor_balanced, l_cell, layers, BimoduleTensor};
use crate::report::Report;
use crate::separability::{is_separable, SeparabilityWitness};
use crate::structures::catalog::trivial_cells;
use crate::structures::{
    check_balanced, check_bimodule, check_bimodule_map, AlgebraObject, Balanced1Morphism, Bimodule, BimoduleMap,
};

/// `A` as an `A`-`A`-bimodule; the identity 1-morphism of `A` in the Morita 3-category.
pub fn identity_bimodule(algebra: &Arc<AlgebraObject>) -> Bimodule {
    Bimodule::identity(algebra)
}

/// A candidate `P□Q → A` together with the cells that make it a balanced
/// `A`-`A`-bimodule map.
#[derive(Clone, Debug)]
pub struct MoritaData {
    /// `P□Q → A`
    pub ev: Gen,
    /// `ev ∘ (n^P□1) ⇒ ev ∘ (1□l^Q)`
    pub beta: TwoCell,
    /// `m ∘ (1□ev) ⇒ ev ∘ (l^P□1)`
    pub chi: TwoCell,
    /// `m ∘ (ev□1) ⇒ ev ∘ (1□n^Q)`
    pub psi: TwoCell,
}

impl MoritaData {
    /// The multiplication, balanced and bilinear through the associator.
    pub fn identity(algebra: &Arc<AlgebraObject>) -> Result<MoritaData> {
        Ok(MoritaData {
            ev: algebra.m.clone(),
            beta: algebra.mu.clone(),
            chi: algebra.mu.inverse()?,
            psi: algebra.mu.clone(),
        })
    }

    /// The data whose structure cells have every admissible entry equal to 1.
    /// Only meaningful when all composites involved are multiplicity free.
    pub fn trivial(p: &Bimodule, q: &Bimodule, ev: Gen) -> Result<MoritaData> {
        let field = &p.left.algebra.field;
        let (beta_src, beta_tgt, chi_src, chi_tgt, psi_src, psi_tgt) = boundaries(p, q, &ev)?;
        let cell = |s: &Path, t: &Path| TwoCell::from_entries(field, s, t, trivial_cells(field, s, t));
        Ok(MoritaData {
            beta: cell(&beta_src, &beta_tgt)?,
            chi: cell(&chi_src, &chi_tgt)?,
            psi: cell(&psi_src, &psi_tgt)?,
            ev,
        })
    }
}

type Boundaries = (Path, Path, Path, Path, Path, Path);

fn boundaries(p: &Bimodule, q: &Bimodule, ev: &Gen) -> Result<Boundaries> {
    let (a_obj, b_obj) = (&p.left.algebra.a, &p.right.algebra.a);
    let (pw, a) = (p.carrier().len(), a_obj.len());
    let (pobj, qobj) = (p.carrier(), q.carrier());
    let m = &p.left.algebra.m;
    let pbq = pobj.boxed(b_obj).boxed(qobj);
    let apq = a_obj.boxed(pobj).boxed(qobj);
    let pqa = pobj.boxed(qobj).boxed(a_obj);
    Ok((
        layers(&pbq, &[(&p.right.n, 0), (ev, 0)])?,
        layers(&pbq, &[(&q.left.l, pw), (ev, 0)])?,
        layers(&apq, &[(ev, a), (m, 0)])?,
        layers(&apq, &[(&p.left.l, 0), (ev, 0)])?,
        layers(&pqa, &[(ev, 0), (m, 0)])?,
        layers(&pqa, &[(&q.right.n, pw), (ev, 0)])?,
    ))
}

/// `P□_B Q ≃ A` as `A`-`A`-bimodules.
#[derive(Clone, Debug)]
pub struct BimoduleEquivalence {
    pub tensor: BimoduleTensor,
    pub data: MoritaData,
    /// `P□_B Q → A`
    pub map: Gen,
    pub unit: TwoCell,
    pub counit: TwoCell,
    pub bimodule_map: BimoduleMap,
}

fn invertible(report: &mut Report, name: &str, cell: &TwoCell) {
    if cell.is_invertible() {
        report.pass(&format!("{name} invertible"));
    } else {
        report.fail(&format!("{name} invertible"), "some block is singular");
    }
}

/// Factors `ev` through `P□_B Q`, descends the bilinearity cells and checks
/// that the result is an invertible bimodule map onto `A`.
fn certify_equivalence(
    p: &Bimodule,
    q: &Bimodule,
    data: &MoritaData,
    sep: &SeparabilityWitness,
    report: &mut Report,
) -> Result<Option<BimoduleEquivalence>> {
    let alg = p.left.algebra.clone();
    let field = &alg.field;
    let target = identity_bimodule(&alg);
    let bt = bimodule_tensor(p, q, sep, &format!("{}□{}", p.name, q.name))?;
    let rt = &bt.tensor;
    let bal = Balanced1Morphism::new(p.right.clone(), q.left.clone(), data.ev.clone(), data.beta.clone())?;
    let bal_report = check_balanced(&bal);
    let balanced = bal_report.passed();
    report.absorb("ev", bal_report);
    if !balanced {
        return Ok(None);
    }
    let fac = factor_balanced(rt, &bal, &format!("{}□{}→{}", p.name, q.name, alg.name))?;
    let h = fac.h.clone();
    let adj = adjoint1(field, &h);
    invertible(report, "unit", &adj.eta);
    invertible(report, "counit", &adj.epsilon);

    let (a_obj, m) = (&alg.a, &alg.m);
    let a = a_obj.len();
    let x = rt.monad.carrier.clone();
    let f = &rt.t.f;
    let tobj = rt.object().clone();

    let u = Rewrite::new(field, &layers(&x.boxed(a_obj), &[(f, 0), (&h, 0), (m, 0)])?)
        .apply(&fac.xi, 0, 0)?
        .apply(&data.psi, 0, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.right.xi_inv, 0, 0)?
        .finish();
    let ta = tobj.boxed(a_obj);
    let psi = rt.condensation.whiskered(&TwoObject::unit(), a_obj).descend_cell(
        field,
        &u,
        &layers(&ta, &[(&h, 0), (m, 0)])?,
        &layers(&ta, &[(&bt.right.module.n, 0), (&h, 0)])?,
    )?;
    let u = Rewrite::new(field, &layers(&a_obj.boxed(&x), &[(f, a), (&h, a), (m, 0)])?)
        .apply(&fac.xi, 0, a)?
        .apply(&data.chi, 0, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.left.xi_inv, 0, 0)?
        .finish();
    let at = a_obj.boxed(&tobj);
    let chi = rt.condensation.whiskered(a_obj, &TwoObject::unit()).descend_cell(
        field,
        &u,
        &layers(&at, &[(&h, a), (m, 0)])?,
        &layers(&at, &[(&bt.left.module.l, 0), (&h, 0)])?,
    )?;
    let bimodule_map = BimoduleMap::new(bt.bimodule.clone(), target, h.clone(), chi, psi)?;
    report.absorb("map", check_bimodule_map(&bimodule_map));
    invertible(report, "map.χ", &bimodule_map.chi);
    invertible(report, "map.ψ", &bimodule_map.psi);
    Ok(Some(BimoduleEquivalence {
        tensor: bt,
        data: data.clone(),
        map: h,
        unit: adj.eta,
        counit: adj.epsilon,
        bimodule_map,
    }))
}

/// Exact evidence that `A` and `B` are Morita equivalent.
#[derive(Clone, Debug)]
pub struct MoritaCertificate {
    /// `A`-`B`
    pub p: Bimodule,
    /// `B`-`A`
    pub q: Bimodule,
    /// `P□_B Q ≃ A`
    pub eq1: BimoduleEquivalence,
    /// `Q□_A P ≃ B`
    pub eq2: BimoduleEquivalence,
    pub report: Report,
}

impl MoritaCertificate {
    /// Runs every check again from the stored data.
    pub fn reverify(&self) -> bool {
        check_morita_witness(&self.p, &self.q, &self.eq1.data, &self.eq2.data).is_ok()
    }
}

fn run_side(
    label: &str,
    p: &Bimodule,
    q: &Bimodule,
    data: &MoritaData,
    report: &mut Report,
) -> Option<BimoduleEquivalence> {
    let middle = &p.right.algebra;
    let sep = match is_separable(middle) {
        Ok(s) => s,
        Err(e) => {
            report.fail(&format!("{label}.separable"), format!("{}: {e}", middle.name));
            return None;
        }
    };
    let mut sub = Report::new(label.to_string());
    let out = match certify_equivalence(p, q, data, &sep, &mut sub) {
        Ok(out) => out,
        Err(e) => {
            sub.fail("construction", e.to_string());
            None
        }
    };
    report.absorb(label, sub);
    out
}

/// Verifies `P□_B Q ≃ A` (from `d1`) and `Q□_A P ≃ B` (from `d2`).  On
/// failure the report names the broken equivalence (`eq1` or `eq2`) and
/// the first failing equation.
pub fn check_morita_witness(
    p: &Bimodule,
    q: &Bimodule,
    d1: &MoritaData,
    d2: &MoritaData,
) -> std::result::Result<MoritaCertificate, Report> {
    let mut report = Report::new(format!("Morita witness {} / {}", p.name, q.name));
    if p.left.algebra.a != q.right.algebra.a || p.right.algebra.a != q.left.algebra.a {
        report.fail("shape", "P and Q are not opposite bimodules");
        return Err(report);
    }
    for (name, b) in [("P", p), ("Q", q)] {
        report.absorb(name, check_bimodule(b));
    }
    if !report.passed() {
        return Err(report);
    }
    let eq1 = run_side("eq1", p, q, d1, &mut report);
    let eq2 = run_side("eq2", q, p, d2, &mut report);
    match (eq1, eq2) {
        (Some(eq1), Some(eq2)) if report.passed() => {
            Ok(MoritaCertificate { p: p.clone(), q: q.clone(), eq1, eq2, report })
        }
        _ => Err(report),
    }
}

const MAX_RANK: usize = 6;
const MAX_DIM_ENTRY: u32 = 4;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap(n, &mut perm, &mut out);
    out
}

fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, perm, out);
        let j = if k % 2 == 0 { i } else { 0 };
        perm.swap(j, k - 1);
    }
}

/// Candidates for one side: the identity data when both bimodules are the
/// identity, then every `ev` whose dims are a permutation of those of the
/// universal balanced map, with all-ones structure cells.
fn candidates(p: &Bimodule, q: &Bimodule) -> Result<Vec<MoritaData>> {
    let alg = &p.left.algebra;
    let mut out = Vec::new();
    let id = identity_bimodule(alg);
    if p.left.l == id.left.l && q.left.l == id.left.l && p.right.n == id.right.n && q.right.n == id.right.n {
        out.push(MoritaData::identity(alg)?);
    }
    let sep = is_separable(&p.right.algebra)?;
    let bt = bimodule_tensor(p, q, &sep, "T")?;
    let t_dims = Path::generator(&bt.tensor.t.f).dims();
    let n = alg.rank();
    if n != bt.tensor.object().rank() || n > MAX_RANK {
        return Ok(out);
    }
    let x = bt.tensor.monad.carrier.clone();
    for perm in permutations(n) {
        let dims: Vec<Vec<u32>> = perm.iter().map(|&r| t_dims[r].clone()).collect();
        if dims.iter().flatten().any(|&d| d > MAX_DIM_ENTRY) {
            continue;
        }
        let ev = Generator::from_dims("ev", x.clone(), alg.a.clone(), &dims)?;
        out.push(MoritaData::trivial(p, q, ev)?);
    }
    Ok(out)
}

fn first_success(p: &Bimodule, q: &Bimodule) -> Result<Option<MoritaData>> {
    let sep = is_separable(&p.right.algebra)?;
    for data in candidates(p, q)? {
        let mut scratch = Report::new("candidate");
        if let Ok(Some(_)) = certify_equivalence(p, q, &data, &sep, &mut scratch) {
            if scratch.passed() {
                return Ok(Some(data));
            }
        }
    }
    Ok(None)
}

/// Searches the bounded candidate family for both equivalences.  Failing to
/// find a witness is inconclusive and reported as `SearchExhausted`.
pub fn find_morita_witness(p: &Bimodule, q: &Bimodule) -> Result<MoritaCertificate> {
    let exhausted = |side: &str| {
        Error::SearchExhausted(format!(
            "no {side} witness for {} / {} among identity data and permutation-shaped maps with unit cells \
             (rank ≤ {MAX_RANK}, dims entries ≤ {MAX_DIM_ENTRY}); Morita equivalence is undecided",
            p.name, q.name
        ))
    };
    let d1 = first_success(p, q)?.ok_or_else(|| exhausted("P□Q"))?;
    let d2 = first_success(q, p)?.ok_or_else(|| exhausted("Q□P"))?;
    check_morita_witness(p, q, &d1, &d2).map_err(|r| Error::AxiomViolation {
        equation: r.failures().next().map(|c| c.name.clone()).unwrap_or_default(),
        detail: r.to_string(),
    })
}

fn matmul(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

fn is_permutation(d: &[Vec<u32>]) -> bool {
    let n = d.len();
    n == d.first().map_or(0, Vec::len)
        && d.iter().all(|r| r.iter().sum::<u32>() == 1 && r.iter().all(|&x| x <= 1))
        && (0..n).all(|j| d.iter().map(|r| r[j]).sum::<u32>() == 1)
}

/// `P ↦ A□_A P`, compared with `P` through the left unitor: the unitor must
/// be a verified equivalence and its permutation must carry both action
/// dimension matrices of `A□_A P` onto those of `P`.
pub fn eilenberg_watts_roundtrip(p: &Bimodule) -> Report {
    let alg = &p.left.algebra;
    let mut report = Report::new(format!("Eilenberg–Watts roundtrip for {}", p.name));
    let unitor = match is_separable(alg).and_then(|sep| l_cell(p, &sep)) {
        Ok(u) => u,
        Err(e) => {
            report.fail("unitor", e.to_string());
            return report;
        }
    };
    report.absorb("unitor", unitor.report.clone());
    let t = &unitor.tensor.bimodule;
    let perm = Path::generator(&unitor.map).dims();
    report.record(
        "rank",
        if t.carrier().rank() == p.carrier().rank() && is_permutation(&perm) {
            Ok(())
        } else {
            Err(format!("A□P has rank {} against {}", t.carrier().rank(), p.carrier().rank()))
        },
    );
    let (ra, rb) = (alg.rank(), p.right.algebra.rank());
    let id = |n: usize| (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect::<Vec<Vec<u32>>>();
    let kron = |x: &[Vec<u32>], y: &[Vec<u32>]| -> Vec<Vec<u32>> {
        x.iter()
            .flat_map(|xr| y.iter().map(move |yr| xr.iter().flat_map(|a| yr.iter().map(move |b| a * b)).collect()))
            .collect()
    };
    let right_t = Path::generator(&t.right.n).dims();
    let right_p = Path::generator(&p.right.n).dims();
    report.record(
        "right action dims",
        if matmul(&perm, &right_t) == matmul(&right_p, &kron(&perm, &id(rb))) {
            Ok(())
        } else {
            Err("the unitor does not carry the right action dims onto P's".into())
        },
    );
    let left_t = Path::generator(&t.left.l).dims();
    let left_p = Path::generator(&p.left.l).dims();
    report.record(
        "left action dims",
        if matmul(&perm, &left_t) == matmul(&left_p, &kron(&id(ra), &perm)) {
            Ok(())
        } else {
            Err("the unitor does not carry the left action dims onto P's".into())
        },
    );
    report
}

/// Dimension of the bimodule endomorphisms of the identity of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indecomposability {
    pub dim: usize,
    pub indecomposable: bool,
}

/// Solves for 2-cells `ζ: Id_A ⇒ Id_A` that commute with the multiplication
/// on either input.
pub fn indecomposable(algebra: &AlgebraObject) -> Result<Indecomposability> {
    let field = &algebra.field;
    let a = &algebra.a;
    let id = Path::identity(a);
    let mp = Path::generator(&algebra.m);
    let unit = TwoObject::unit();
    let mut prob = CellProblem::new(field, &id, &id)?;
    let zero = TwoCell::zero(field, &mp, &mp)?;
    prob.require(|z| z.whiskered(&unit, a).before_path(&mp)?.sub(&z.after_path(&mp)?), &zero)?;
    prob.require(|z| z.whiskered(a, &unit).before_path(&mp)?.sub(&z.after_path(&mp)?), &zero)?;
    let dim = prob.nullity();
    Ok(Indecomposability { dim, indecomposable: dim == 1 })
}

#[cfg(test)]
mod tests;
