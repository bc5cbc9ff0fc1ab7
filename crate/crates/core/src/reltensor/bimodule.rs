//! Outer actions on relative tensor products.

use std::sync::Arc;

use super::{layers, relative_tensor, rewrite, RelativeTensor};
use crate::ambient::{descend, Gen, Path, Rewrite, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::separability::SeparabilityWitness;
use crate::structures::{check_bimodule, AlgebraObject, Bimodule, LeftModule, RightModule};

/// A right action on `M□_A N` descended from the right action on `N`.
#[derive(Clone, Debug)]
pub struct InducedRight {
    pub module: RightModule,
    /// `n^T ∘ (t□1) ⇒ t ∘ (1□n^N)`
    pub xi: TwoCell,
    pub xi_inv: TwoCell,
}

/// A left action on `M□_A N` descended from the left action on `M`.
#[derive(Clone, Debug)]
pub struct InducedLeft {
    pub module: LeftModule,
    /// `l^T ∘ (1□t) ⇒ t ∘ (l^M□1)`
    pub xi: TwoCell,
    pub xi_inv: TwoCell,
}

fn same_carrier(a: &TwoObject, b: &TwoObject, what: &str) -> Result<()> {
    if a != b {
        return Err(Error::InvalidInput(format!("{what} does not match the tensor factor")));
    }
    Ok(())
}

/// The right `C`-action on `M□_A N` for an `A`-`C` bimodule `N`.
pub fn induced_right(rt: &RelativeTensor, n_bimod: &Bimodule, name: &str) -> Result<InducedRight> {
    same_carrier(&n_bimod.left.carrier, &rt.left().carrier, "the bimodule's carrier")?;
    let field = &rt.algebra.field;
    let c_alg: &Arc<AlgebraObject> = &n_bimod.right.algebra;
    let c = &c_alg.a;
    let (p, _, _) = rt.widths();
    let t = rt.object().len();
    let (i, ms, nm, ln) = (&rt.algebra.i, &rt.separability.rigidity.m_star, &rt.right().n, &rt.left().l);
    let (nn, f) = (&n_bimod.right.n, &rt.t.f);
    let xc = rt.monad.carrier.boxed(c);
    let cond = &rt.condensation;
    let cond_r = cond.whiskered(&TwoObject::unit(), c);

    let h = layers(&xc, &[(nn, p), (f, 0)])?;
    let action = Rewrite::new(field, &cond_r.e.then(&h)?)
        .at(&n_bimod.beta, 3)?
        .reorder_to(&layers(&xc, &[(nn, p), (i, p), (ms, p), (nm, 0), (ln, p), (f, 0)])?)?
        .apply(&cond.absorb(field)?, 1, 0)?
        .finish();
    let d = descend(field, &cond_r, &h, &action, name)?;
    let nt = d.h.clone();

    let tobj = rt.object().clone();
    let xcc = xc.boxed(c);
    let u = Rewrite::new(
        field,
        &cond_r.f.whiskered(&TwoObject::unit(), c).then(&layers(&tobj.boxed(c).boxed(c), &[(&nt, 0), (&nt, 0)])?)?,
    )
    .apply(&d.xi, 0, 0)?
    .apply(&d.xi, 1, 0)?
    .at(&n_bimod.right.nu, 0)?
    .apply(&d.xi_inv, 1, 0)?
    .swap(0)?
    .finish();
    let cond_rr = cond.whiskered(&TwoObject::unit(), &c.boxed(c));
    debug_assert_eq!(u.source().source(), &xcc);
    let tcc = tobj.boxed(c).boxed(c);
    let nu = cond_rr.descend_cell(
        field,
        &u,
        &layers(&tcc, &[(&nt, 0), (&nt, 0)])?,
        &layers(&tcc, &[(&c_alg.m, t), (&nt, 0)])?,
    )?;

    let x = &rt.monad.carrier;
    let u = rewrite(&rt.algebra, x, &[(f, 0), (&c_alg.i, t), (&nt, 0)])?
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&n_bimod.right.rho, 0)?
        .finish();
    let rho = cond.descend_cell(field, &u, &layers(&tobj, &[(&c_alg.i, t), (&nt, 0)])?, &Path::identity(&tobj))?;
    let module = RightModule::new(name, c_alg, nt, nu, rho)?;
    Ok(InducedRight { module, xi: d.xi, xi_inv: d.xi_inv })
}

/// The left `C`-action on `M□_A N` for a `C`-`A` bimodule `M`.
pub fn induced_left(rt: &RelativeTensor, m_bimod: &Bimodule, name: &str) -> Result<InducedLeft> {
    same_carrier(&m_bimod.right.carrier, &rt.right().carrier, "the bimodule's carrier")?;
    let field = &rt.algebra.field;
    let c_alg: &Arc<AlgebraObject> = &m_bimod.left.algebra;
    let c = &c_alg.a;
    let a = c.len();
    let (p, _, _) = rt.widths();
    let (i, ms, nm, ln) = (&rt.algebra.i, &rt.separability.rigidity.m_star, &rt.right().n, &rt.left().l);
    let (lm, f) = (&m_bimod.left.l, &rt.t.f);
    let cx = c.boxed(&rt.monad.carrier);
    let cond = &rt.condensation;
    let cond_l = cond.whiskered(c, &TwoObject::unit());

    let h = layers(&cx, &[(lm, 0), (f, 0)])?;
    let action = Rewrite::new(field, &cond_l.e.then(&h)?)
        .reorder_to(&layers(&cx, &[(i, a + p), (ms, a + p), (nm, a), (lm, 0), (ln, p), (f, 0)])?)?
        .at(&m_bimod.beta.inverse()?, 2)?
        .reorder_to(&layers(&cx, &[(lm, 0), (i, p), (ms, p), (nm, 0), (ln, p), (f, 0)])?)?
        .apply(&cond.absorb(field)?, 1, 0)?
        .finish();
    let d = descend(field, &cond_l, &h, &action, name)?;
    let lt = d.h.clone();

    let tobj = rt.object().clone();
    let ccx = c.boxed(&cx);
    let f_ll = cond.f.whiskered(&c.boxed(c), &TwoObject::unit());
    let u = Rewrite::new(field, &f_ll.then(&layers(&c.boxed(c).boxed(&tobj), &[(&c_alg.m, 0), (&lt, 0)])?)?)
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&m_bimod.left.kappa, 0)?
        .apply(&d.xi_inv, 1, 0)?
        .apply(&d.xi_inv, 0, a)?
        .finish();
    debug_assert_eq!(u.source().source(), &ccx);
    let cond_ll = cond.whiskered(&c.boxed(c), &TwoObject::unit());
    let cct = c.boxed(c).boxed(&tobj);
    let kappa = cond_ll.descend_cell(
        field,
        &u,
        &layers(&cct, &[(&c_alg.m, 0), (&lt, 0)])?,
        &layers(&cct, &[(&lt, a), (&lt, 0)])?,
    )?;

    let x = &rt.monad.carrier;
    let u = rewrite(&rt.algebra, x, &[(f, 0), (&c_alg.i, 0), (&lt, 0)])?
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&m_bimod.left.lambda, 0)?
        .finish();
    let lambda = cond.descend_cell(field, &u, &layers(&tobj, &[(&c_alg.i, 0), (&lt, 0)])?, &Path::identity(&tobj))?;
    let module = LeftModule::new(name, c_alg, lt, kappa, lambda)?;
    Ok(InducedLeft { module, xi: d.xi, xi_inv: d.xi_inv })
}

/// `P□_B Q` as an `A`-`C` bimodule.
#[derive(Clone, Debug)]
pub struct BimoduleTensor {
    pub tensor: RelativeTensor,
    pub left: InducedLeft,
    pub right: InducedRight,
    pub bimodule: Bimodule,
}

impl BimoduleTensor {
    pub fn t(&self) -> &Gen {
        &self.tensor.t.f
    }
}

/// Tensors an `A`-`B` bimodule with a `B`-`C` bimodule over a separable `B`.
/// The result is checked against every bimodule axiom.
pub fn bimodule_tensor(p: &Bimodule, q: &Bimodule, sep: &SeparabilityWitness, name: &str) -> Result<BimoduleTensor> {
    let b_alg = &p.right.algebra;
    if q.left.algebra.a != b_alg.a {
        return Err(Error::InvalidInput(format!("`{}` and `{}` do not share a middle algebra", p.name, q.name)));
    }
    let tensor = relative_tensor(b_alg, &p.right, &q.left, sep, name)?;
    let left = induced_left(&tensor, p, name)?;
    let right = induced_right(&tensor, q, name)?;
    let field = &b_alg.field;
    let (a_obj, c_obj) = (&p.left.algebra.a, &q.right.algebra.a);
    let a = a_obj.len();
    let (lt, nt) = (&left.module.l, &right.module.n);
    let f = &tensor.t.f;
    let axc = a_obj.boxed(&tensor.monad.carrier).boxed(c_obj);
    let u = rewrite(b_alg, &axc, &[(f, a), (lt, 0), (nt, 0)])?
        .apply(&left.xi, 0, 0)?
        .apply(&right.xi, 1, 0)?
        .swap(0)?
        .apply(&left.xi_inv, 1, 0)?
        .apply(&right.xi_inv, 0, a)?
        .finish();
    let cond = tensor.condensation.whiskered(a_obj, c_obj);
    let atc = a_obj.boxed(tensor.object()).boxed(c_obj);
    let beta =
        cond.descend_cell(field, &u, &layers(&atc, &[(lt, 0), (nt, 0)])?, &layers(&atc, &[(nt, a), (lt, 0)])?)?;
    let bimodule = Bimodule::new(name, left.module.clone(), right.module.clone(), beta)?;
    let report = check_bimodule(&bimodule);
    if let Some(c) = report.failures().next() {
        return Err(Error::AxiomViolation {
            equation: c.name.clone(),
            detail: format!("induced structure on {name}: {}", c.detail.clone().unwrap_or_default()),
        });
    }
    Ok(BimoduleTensor { tensor, left, right, bimodule })
}
