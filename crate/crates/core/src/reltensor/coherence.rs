//! Unitors and associator of the relative tensor product, as explicit
//! bimodule equivalences.

use super::bimodule::{bimodule_tensor, BimoduleTensor};
use super::{factor_balanced, factor_balanced_2cell, layers, Factorization};
use crate::ambient::{adjoint1, descend, Condensation, Gen, Path, Rewrite, TwoCell, TwoObject};
use crate::error::Result;
use crate::report::Report;
use crate::separability::SeparabilityWitness;
use crate::structures::{
    check_balanced, check_bimodule_map, Balanced1Morphism, Bimodule, BimoduleMap, LeftModule, RightModule,
};

fn invertible(report: &mut Report, name: &str, cell: &TwoCell) {
    if cell.is_invertible() {
        report.pass(&format!("{name} invertible"));
    } else {
        report.fail(&format!("{name} invertible"), "some block is singular");
    }
}

fn record(report: &mut Report, name: &str, lhs: Result<TwoCell>, rhs: Result<TwoCell>) {
    let outcome = match (lhs, rhs) {
        (Ok(l), Ok(r)) => match l.difference(&r) {
            None => Ok(()),
            Some(d) => Err(format!("sides differ at {d}")),
        },
        (Err(e), _) | (_, Err(e)) => Err(format!("could not evaluate: {e}")),
    };
    report.record(name, outcome);
}

/// `A□_A P ≃ P` or `P□_B B ≃ P`, with the comparison map, its inverse
/// `t ∘ (unit insertion)` and the two invertible 2-cells exhibiting the
/// equivalence.
#[derive(Clone, Debug)]
pub struct UnitorCell {
    pub tensor: BimoduleTensor,
    /// `T → P`
    pub map: Gen,
    /// `P → T`
    pub inverse: Path,
    /// `map ∘ inverse ⇒ Id_P`
    pub section: TwoCell,
    /// `inverse ∘ map ⇒ Id_T`
    pub retraction: TwoCell,
    pub bimodule_map: BimoduleMap,
    pub report: Report,
}

impl UnitorCell {
    pub fn verified(&self) -> bool {
        self.report.passed()
    }
}

fn finish_unitor(
    tensor: BimoduleTensor,
    fac: Factorization,
    p: &Bimodule,
    inverse: Path,
    section: TwoCell,
    gamma: TwoCell,
    chi: TwoCell,
    psi: TwoCell,
    subject: &str,
) -> Result<UnitorCell> {
    let t_obj = tensor.tensor.object().clone();
    let map_then_inverse = Path::generator(&fac.h).then(&inverse)?;
    let (retraction, nullity) =
        factor_balanced_2cell(&tensor.tensor, &map_then_inverse, &Path::identity(&t_obj), &gamma)?;
    let bimodule_map = BimoduleMap::new(tensor.bimodule.clone(), p.clone(), fac.h.clone(), chi, psi)?;
    let mut report = Report::new(subject.to_string());
    invertible(&mut report, "section", &section);
    invertible(&mut report, "retraction", &retraction);
    report.record(
        "retraction unique",
        if nullity == 0 { Ok(()) } else { Err(format!("{nullity}-dimensional family of factorizations")) },
    );
    report.absorb("map", check_bimodule_map(&bimodule_map));
    for (name, cell) in [("χ", &bimodule_map.chi), ("ψ", &bimodule_map.psi)] {
        invertible(&mut report, &format!("map.{name}"), cell);
    }
    Ok(UnitorCell { tensor, map: fac.h, inverse, section, retraction, bimodule_map, report })
}

/// The left unitor `A□_A P ≃ P` for an `A`-`B` bimodule `P`.
pub fn l_cell(p: &Bimodule, sep: &SeparabilityWitness) -> Result<UnitorCell> {
    let alg = p.left.algebra.clone();
    let field = &alg.field;
    let id = Bimodule::identity(&alg);
    let bt = bimodule_tensor(&id, p, sep, &format!("{}□{}", alg.name, p.name))?;
    let rt = &bt.tensor;
    let a = alg.len();
    let (lp, kp) = (&p.left.l, &p.left.kappa);
    let bal = Balanced1Morphism::new(RightModule::regular(&alg), p.left.clone(), lp.clone(), kp.clone())?;
    let fac = factor_balanced(rt, &bal, &format!("l_{}", p.name))?;
    let (f, lt) = (&rt.t.f, &fac.h);
    let pobj = p.carrier().clone();
    let x = rt.monad.carrier.clone();

    let inverse = layers(&pobj, &[(&alg.i, 0), (f, 0)])?;
    let section =
        Rewrite::new(field, &inverse.then(&Path::generator(lt))?).apply(&fac.xi, 1, 0)?.at(&p.left.lambda, 0)?.finish();
    let gamma = Rewrite::new(field, &layers(&x, &[(f, 0), (lt, 0), (&alg.i, 0), (f, 0)])?)
        .apply(&fac.xi, 0, 0)?
        .swap(0)?
        .at(&rt.t.beta.inverse()?, 1)?
        .at(&alg.lambda, 0)?
        .finish();

    let b_obj = &p.right.algebra.a;
    let xb = x.boxed(b_obj);
    let u = Rewrite::new(field, &layers(&xb, &[(f, 0), (lt, 0), (&p.right.n, 0)])?)
        .apply(&fac.xi, 0, 0)?
        .at(&p.beta, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.right.xi_inv, 0, 0)?
        .finish();
    let tb = rt.object().boxed(b_obj);
    let psi = rt.condensation.whiskered(&TwoObject::unit(), b_obj).descend_cell(
        field,
        &u,
        &layers(&tb, &[(lt, 0), (&p.right.n, 0)])?,
        &layers(&tb, &[(&bt.right.module.n, 0), (lt, 0)])?,
    )?;
    let ax = alg.a.boxed(&x);
    let u = Rewrite::new(field, &layers(&ax, &[(f, a), (lt, a), (lp, 0)])?)
        .apply(&fac.xi, 0, a)?
        .at(&kp.inverse()?, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.left.xi_inv, 0, 0)?
        .finish();
    let at = alg.a.boxed(rt.object());
    let chi = rt.condensation.whiskered(&alg.a, &TwoObject::unit()).descend_cell(
        field,
        &u,
        &layers(&at, &[(lt, a), (lp, 0)])?,
        &layers(&at, &[(&bt.left.module.l, 0), (lt, 0)])?,
    )?;
    finish_unitor(bt, fac, p, inverse, section, gamma, chi, psi, &format!("left unitor of {}", p.name))
}

/// The right unitor `P□_B B ≃ P` for an `A`-`B` bimodule `P`.
pub fn r_cell(p: &Bimodule, sep: &SeparabilityWitness) -> Result<UnitorCell> {
    let alg = p.right.algebra.clone();
    let field = &alg.field;
    let id = Bimodule::identity(&alg);
    let bt = bimodule_tensor(p, &id, sep, &format!("{}□{}", p.name, alg.name))?;
    let rt = &bt.tensor;
    let pw = p.right.len();
    let a_obj = &p.left.algebra.a;
    let a = a_obj.len();
    let (np, nu) = (&p.right.n, &p.right.nu);
    let bal = Balanced1Morphism::new(p.right.clone(), LeftModule::regular(&alg), np.clone(), nu.clone())?;
    let fac = factor_balanced(rt, &bal, &format!("r_{}", p.name))?;
    let (f, nt) = (&rt.t.f, &fac.h);
    let pobj = p.carrier().clone();
    let x = rt.monad.carrier.clone();

    let inverse = layers(&pobj, &[(&alg.i, pw), (f, 0)])?;
    let section =
        Rewrite::new(field, &inverse.then(&Path::generator(nt))?).apply(&fac.xi, 1, 0)?.at(&p.right.rho, 0)?.finish();
    let gamma = Rewrite::new(field, &layers(&x, &[(f, 0), (nt, 0), (&alg.i, pw), (f, 0)])?)
        .apply(&fac.xi, 0, 0)?
        .swap(0)?
        .at(&rt.t.beta, 1)?
        .at(&alg.rho, 0)?
        .finish();

    let xb = x.boxed(&alg.a);
    let u = Rewrite::new(field, &layers(&xb, &[(f, 0), (nt, 0), (np, 0)])?)
        .apply(&fac.xi, 0, 0)?
        .at(nu, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.right.xi_inv, 0, 0)?
        .finish();
    let tb = rt.object().boxed(&alg.a);
    let psi = rt.condensation.whiskered(&TwoObject::unit(), &alg.a).descend_cell(
        field,
        &u,
        &layers(&tb, &[(nt, 0), (np, 0)])?,
        &layers(&tb, &[(&bt.right.module.n, 0), (nt, 0)])?,
    )?;
    let ax = a_obj.boxed(&x);
    let u = Rewrite::new(field, &layers(&ax, &[(f, a), (nt, a), (&p.left.l, 0)])?)
        .apply(&fac.xi, 0, a)?
        .at(&p.beta.inverse()?, 0)?
        .apply(&fac.xi_inv, 1, 0)?
        .apply(&bt.left.xi_inv, 0, 0)?
        .finish();
    let at = a_obj.boxed(rt.object());
    let chi = rt.condensation.whiskered(a_obj, &TwoObject::unit()).descend_cell(
        field,
        &u,
        &layers(&at, &[(nt, a), (&p.left.l, 0)])?,
        &layers(&at, &[(&bt.left.module.l, 0), (nt, 0)])?,
    )?;
    finish_unitor(bt, fac, p, inverse, section, gamma, chi, psi, &format!("right unitor of {}", p.name))
}

/// `(M□_B N)□_C P ≃ M□_B (N□_C P)`.
#[derive(Clone, Debug)]
pub struct AlphaCell {
    pub left_tensor: BimoduleTensor,
    pub inner_left: BimoduleTensor,
    pub right_tensor: BimoduleTensor,
    pub inner_right: BimoduleTensor,
    /// `(M□_B N)□_C P → M□_B (N□_C P)`
    pub map: Gen,
    /// `α ⊣ α*` unit and counit; both invertible exactly when `α` is an
    /// equivalence
    pub unit: TwoCell,
    pub counit: TwoCell,
    pub bimodule_map: BimoduleMap,
    pub report: Report,
}

impl AlphaCell {
    pub fn verified(&self) -> bool {
        self.report.passed()
    }
}

/// The two balanced structures of `Φ = t_R ∘ (1□t_2)` on `M□N□P`.
struct Trilinear<'a> {
    m: &'a Bimodule,
    n: &'a Bimodule,
    inner_right: &'a BimoduleTensor,
    right_tensor: &'a BimoduleTensor,
}

impl Trilinear<'_> {
    fn widths(&self) -> (usize, usize, usize) {
        (self.m.right.len(), self.m.right.algebra.len(), self.n.right.len())
    }

    fn phi_gens(&self) -> (Gen, Gen) {
        (self.inner_right.t().clone(), self.right_tensor.t().clone())
    }

    /// `Φ(n^M□1□1) ⇒ Φ(1□l^N□1)` on `M□B□N□P`.
    fn beta_b(&self, field: &crate::Field) -> Result<TwoCell> {
        let (m, _, _) = self.widths();
        let (f2, fr) = self.phi_gens();
        let obj = self.m.right.carrier.boxed(&self.m.right.algebra.a).boxed(&self.inner_right.tensor.monad.carrier);
        Ok(Rewrite::new(field, &layers(&obj, &[(&self.m.right.n, 0), (&f2, m), (&fr, 0)])?)
            .swap(0)?
            .apply(&self.right_tensor.tensor.t.beta, 1, 0)?
            .apply(&self.inner_right.left.xi, 0, m)?
            .finish())
    }

    /// `Φ(1□n^N□1) ⇒ Φ(1□1□l^P)` on `M□N□C□P`.
    fn beta_c(&self, field: &crate::Field) -> Result<TwoCell> {
        let (m, _, _) = self.widths();
        let (f2, fr) = self.phi_gens();
        let obj = self.m.right.carrier.boxed(&self.inner_right.tensor.t.middle());
        Ok(Rewrite::new(field, &layers(&obj, &[(&self.n.right.n, m), (&f2, m), (&fr, 0)])?)
            .apply(&self.inner_right.tensor.t.beta, 0, m)?
            .finish())
    }
}

fn bc_compatibility(tri: &Trilinear<'_>, field: &crate::Field, report: &mut Report) {
    let outcome = (|| -> Result<(TwoCell, TwoCell)> {
        let (m, b, _) = tri.widths();
        let (f2, fr) = tri.phi_gens();
        let bb = tri.beta_b(field)?;
        let bc = tri.beta_c(field)?;
        let obj = tri.m.right.carrier.boxed(&tri.m.right.algebra.a).boxed(&tri.inner_right.tensor.t.middle());
        let start = layers(&obj, &[(&tri.n.right.n, m + b), (&tri.m.right.n, 0), (&f2, m), (&fr, 0)])?;
        let one =
            Rewrite::new(field, &start).apply(&bb, 1, 0)?.at(&tri.n.beta.inverse()?, 0)?.apply(&bc, 1, 0)?.finish();
        let two = Rewrite::new(field, &start)
            .swap(0)?
            .apply(&bc, 1, 0)?
            .swap(0)?
            .apply(&bb, 1, 0)?
            .reorder_to(one.target())?
            .finish();
        Ok((one, two))
    })();
    match outcome {
        Ok((one, two)) => record(report, "BCbalancedcompatibility", Ok(one), Ok(two)),
        Err(e) => report.fail("BCbalancedcompatibility", format!("could not evaluate: {e}")),
    }
}

/// Checks that the two balanced structures on `M□N□P → M□_B(N□_C P)` commute.
pub fn check_bc_compatibility(
    m: &Bimodule,
    n: &Bimodule,
    p: &Bimodule,
    inner_right: &BimoduleTensor,
    right_tensor: &BimoduleTensor,
) -> Report {
    let tri = Trilinear { m, n, inner_right, right_tensor };
    let mut r = Report::new(format!("balanced structures on {}□{}□{}", m.name, n.name, p.name));
    bc_compatibility(&tri, &m.right.algebra.field, &mut r);
    r
}

/// A condensation obtained by splitting twice, `f = f₂ ∘ f₁`.
fn composite(first: &Condensation, second: &Condensation, field: &crate::Field) -> Result<Condensation> {
    let f = first.f.then(&second.f)?;
    let g = second.g.then(&first.g)?;
    let fg = g.then(&f)?;
    let k = second.g.len();
    let phi = Rewrite::new(field, &fg).apply(&first.phi, k, 0)?.apply(&second.phi, 0, 0)?.finish();
    let gamma = Rewrite::new(field, &Path::identity(second.downstairs()))
        .apply(&second.gamma, 0, 0)?
        .apply(&first.gamma, k, 0)?
        .finish();
    let e = f.then(&g)?;
    let id = TwoCell::identity(field, &e);
    Ok(Condensation { e, f, g, phi, gamma, theta: id.clone(), theta_inv: id })
}

/// Builds `α_{M,N,P}` by factoring `Φ` first through `M□N□P → (M□_B N)□P`
/// and then through the outer splitting, and certifies it as a bimodule
/// equivalence.
pub fn alpha_cell(
    m: &Bimodule,
    n: &Bimodule,
    p: &Bimodule,
    sep_b: &SeparabilityWitness,
    sep_c: &SeparabilityWitness,
) -> Result<AlphaCell> {
    let field = m.right.algebra.field.clone();
    let field = &field;
    let t1 = bimodule_tensor(m, n, sep_b, &format!("{}□{}", m.name, n.name))?;
    let tl = bimodule_tensor(&t1.bimodule, p, sep_c, &format!("({}□{})□{}", m.name, n.name, p.name))?;
    let t2 = bimodule_tensor(n, p, sep_c, &format!("{}□{}", n.name, p.name))?;
    let tr = bimodule_tensor(m, &t2.bimodule, sep_b, &format!("{}□({}□{})", m.name, n.name, p.name))?;
    let tri = Trilinear { m, n, inner_right: &t2, right_tensor: &tr };
    let (mw, _, _) = tri.widths();
    let (f2, fr) = tri.phi_gens();
    let f1 = t1.t().clone();
    let mut report = Report::new(format!("associator for {}, {}, {}", m.name, n.name, p.name));
    bc_compatibility(&tri, field, &mut report);

    let pobj = p.carrier();
    let mnp = t1.tensor.monad.carrier.boxed(pobj);
    let phi = layers(&mnp, &[(&f2, mw), (&fr, 0)])?;
    let rt1 = &t1.tensor;
    let (i, ms) = (&rt1.algebra.i, &rt1.separability.rigidity.m_star);
    let cond1 = rt1.condensation.whiskered(&TwoObject::unit(), pobj);
    let action = Rewrite::new(field, &cond1.e.then(&phi)?)
        .apply(&t2.left.xi_inv, 3, mw)?
        .reorder_to(&layers(
            &mnp,
            &[(&f2, mw), (i, mw), (ms, mw), (&m.right.n, 0), (&t2.left.module.l, mw), (&fr, 0)],
        )?)?
        .apply(&tr.tensor.condensation.absorb(field)?, 1, 0)?
        .finish();
    let d1 = descend(field, &cond1, &phi, &action, "Φ₁")?;
    let phi1 = d1.h.clone();

    let c_obj = &n.right.algebra.a;
    let t1w = t1.bimodule.carrier().len();
    let mncp = rt1.monad.carrier.boxed(c_obj).boxed(pobj);
    let u = Rewrite::new(field, &layers(&mncp, &[(&f1, 0), (&t1.right.module.n, 0), (&phi1, 0)])?)
        .apply(&t1.right.xi, 0, 0)?
        .apply(&d1.xi, 1, 0)?
        .apply(&t2.tensor.t.beta, 0, mw)?
        .apply(&d1.xi_inv, 1, 0)?
        .swap(0)?
        .finish();
    let tcp = t1.bimodule.carrier().boxed(c_obj).boxed(pobj);
    let beta1 = rt1.condensation.whiskered(&TwoObject::unit(), &c_obj.boxed(pobj)).descend_cell(
        field,
        &u,
        &layers(&tcp, &[(&t1.right.module.n, 0), (&phi1, 0)])?,
        &layers(&tcp, &[(&p.left.l, t1w), (&phi1, 0)])?,
    )?;
    let bal = Balanced1Morphism::new(t1.right.module.clone(), p.left.clone(), phi1.clone(), beta1)?;
    report.absorb("Φ₁", check_balanced(&bal));
    let fac = factor_balanced(&tl.tensor, &bal, "α")?;
    let alpha = fac.h.clone();

    let adj = adjoint1(field, &alpha);
    invertible(&mut report, "α unit", &adj.eta);
    invertible(&mut report, "α counit", &adj.epsilon);

    // Outer structure, descended along both splittings at once.
    let both = composite(&cond1, &tl.tensor.condensation, field)?;
    let d_obj = &p.right.algebra.a;
    let a_obj = &m.left.algebra.a;
    let a = a_obj.len();
    let (ntl, ntr) = (&tl.right.module.n, &tr.right.module.n);
    let u = Rewrite::new(
        field,
        &both
            .f
            .whiskered(&TwoObject::unit(), d_obj)
            .then(&layers(&tl.bimodule.carrier().boxed(d_obj), &[(&alpha, 0), (ntr, 0)])?)?,
    )
    .apply(&fac.xi, 1, 0)?
    .apply(&d1.xi, 0, 0)?
    .apply(&tr.right.xi, 1, 0)?
    .apply(&t2.right.xi, 0, mw)?
    .apply(&d1.xi_inv, 1, 0)?
    .apply(&fac.xi_inv, 2, 0)?
    .swap(0)?
    .apply(&tl.right.xi_inv, 1, 0)?
    .finish();
    let tld = tl.bimodule.carrier().boxed(d_obj);
    let psi = both.whiskered(&TwoObject::unit(), d_obj).descend_cell(
        field,
        &u,
        &layers(&tld, &[(&alpha, 0), (ntr, 0)])?,
        &layers(&tld, &[(ntl, 0), (&alpha, 0)])?,
    )?;
    let (ltl, ltr) = (&tl.left.module.l, &tr.left.module.l);
    let u = Rewrite::new(
        field,
        &both
            .f
            .whiskered(a_obj, &TwoObject::unit())
            .then(&layers(&a_obj.boxed(tl.bimodule.carrier()), &[(&alpha, a), (ltr, 0)])?)?,
    )
    .apply(&fac.xi, 1, a)?
    .apply(&d1.xi, 0, a)?
    .apply(&tr.left.xi, 1, 0)?
    .swap(0)?
    .apply(&d1.xi_inv, 1, 0)?
    .apply(&fac.xi_inv, 2, 0)?
    .apply(&t1.left.xi_inv, 0, 0)?
    .apply(&tl.left.xi_inv, 1, 0)?
    .finish();
    let atl = a_obj.boxed(tl.bimodule.carrier());
    let chi = both.whiskered(a_obj, &TwoObject::unit()).descend_cell(
        field,
        &u,
        &layers(&atl, &[(&alpha, a), (ltr, 0)])?,
        &layers(&atl, &[(ltl, 0), (&alpha, 0)])?,
    )?;
    let bimodule_map = BimoduleMap::new(tl.bimodule.clone(), tr.bimodule.clone(), alpha.clone(), chi, psi)?;
    report.absorb("map", check_bimodule_map(&bimodule_map));
    Ok(AlphaCell {
        left_tensor: tl,
        inner_left: t1,
        right_tensor: tr,
        inner_right: t2,
        map: alpha,
        unit: adj.eta,
        counit: adj.epsilon,
        bimodule_map,
        report,
    })
}
