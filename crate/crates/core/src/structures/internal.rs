//! Module categories of internal algebras.
//!
//! An algebra `b` inside the fusion category underlying `A` (a 1-morphism
//! `b: I → A` with multiplication and unit 2-cells) determines the category
//! of `b`-modules in that fusion category, which is an `A`-module in the
//! ambient 2-category.  It is computed as the splitting of the free-module
//! monad `b ⊗ (−)` on `A`, with the action descended from `m`.

use std::sync::Arc;

use super::check::check_internal_algebra;
use super::types::{AlgebraObject, LeftModule, RightModule};
use crate::ambient::{
    condensation_split, descend, CellProblem, CondensationMonad, Gen, Generator, Path, Rewrite, TwoCell, TwoObject,
};
use crate::error::{Error, Result};

/// An algebra object `(b, m_b, u_b)` in the fusion category of `A`.
#[derive(Clone, Debug)]
pub struct InternalAlgebra {
    pub name: String,
    pub algebra: Arc<AlgebraObject>,
    /// `I → A`
    pub b: Gen,
    /// `m ∘ (b□b) ⇒ b`
    pub mult: TwoCell,
    /// `i ⇒ b`
    pub unit: TwoCell,
}

fn layers(obj: &TwoObject, ls: &[(&Gen, usize)]) -> Result<Path> {
    let owned: Vec<_> = ls.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Path::from_layers(obj, &owned)
}

impl InternalAlgebra {
    pub fn new(
        name: &str,
        algebra: &Arc<AlgebraObject>,
        b: Gen,
        mult: TwoCell,
        unit: TwoCell,
    ) -> Result<InternalAlgebra> {
        let unit_obj = TwoObject::unit();
        if b.source() != &unit_obj || b.target() != &algebra.a {
            return Err(Error::DimensionMismatch(format!("`{}` must run from the unit to A", b.name())));
        }
        let q = algebra.len();
        let bb = layers(&unit_obj, &[(&b, 0), (&b, q), (&algebra.m, 0)])?;
        let bp = Path::generator(&b);
        if mult.source() != &bb || mult.target() != &bp {
            return Err(Error::DimensionMismatch("the multiplication must be m(b□b) ⇒ b".into()));
        }
        if unit.source() != &Path::generator(&algebra.i) || unit.target() != &bp {
            return Err(Error::DimensionMismatch("the unit must be i ⇒ b".into()));
        }
        Ok(InternalAlgebra { name: name.into(), algebra: algebra.clone(), b, mult, unit })
    }

    /// The unit object with multiplication `λ` restricted to it.
    pub fn trivial(algebra: &Arc<AlgebraObject>) -> Result<InternalAlgebra> {
        let f = &algebra.field;
        let i = &algebra.i;
        let q = algebra.len();
        let unit_obj = TwoObject::unit();
        let src = layers(&unit_obj, &[(i, 0), (i, q), (&algebra.m, 0)])?;
        let mult = Rewrite::new(f, &src).at(&algebra.rho, 1)?.finish();
        let unit = TwoCell::identity(f, &Path::generator(i));
        InternalAlgebra::new("1", algebra, i.clone(), mult, unit)
    }

    /// The group algebra `⊕_g g` of a pointed algebra whose associator and
    /// unitors are all 1, with multiplication `g ⊗ h → gh` of coefficient 1.
    pub fn group_algebra(algebra: &Arc<AlgebraObject>) -> Result<InternalAlgebra> {
        let f = &algebra.field;
        let unit_obj = TwoObject::unit();
        let simples = algebra.a.simples();
        let b =
            Generator::new("b", unit_obj.clone(), algebra.a.clone(), simples.iter().map(|s| (vec![], s.clone(), 1)))?;
        let q = algebra.len();
        let bb = layers(&unit_obj, &[(&b, 0), (&b, q), (&algebra.m, 0)])?;
        let configs = bb.configs();
        if configs.len() != simples.len() * simples.len() {
            return Err(Error::InvalidInput(format!("`{}` is not pointed", algebra.name)));
        }
        let bp = Path::generator(&b);
        let entries = configs.into_iter().map(|c| {
            let d = [vec![0], bb.target_labels(&c)].concat();
            (c, d, f.one())
        });
        let mult = TwoCell::from_entries(f, &bb, &bp, entries)?;
        let ip = Path::generator(&algebra.i);
        let unit_entries = ip.configs().into_iter().map(|c| {
            let d = [vec![0], ip.target_labels(&c)].concat();
            (c, d, f.one())
        });
        let unit = TwoCell::from_entries(f, &ip, &bp, unit_entries)?;
        InternalAlgebra::new(&format!("k[{}]", algebra.name), algebra, b, mult, unit)
    }
}

/// Both sides of `μ·δ = Id` and the Frobenius relations are linear in `δ`.
fn solve_delta(field: &crate::Field, e: &Path, mu: &TwoCell) -> Result<TwoCell> {
    let ee = e.then(e)?;
    let k = e.len();
    let mut prob = CellProblem::new(field, e, &ee)?;
    prob.require(|d| d.then(mu), &TwoCell::identity(field, e))?;
    let zero = TwoCell::zero(field, &ee, &ee)?;
    prob.require(
        |d| {
            let lhs = Rewrite::new(field, &ee).apply(d, k, 0)?.apply(mu, 0, 0)?.finish();
            lhs.sub(&mu.then(d)?)
        },
        &zero,
    )?;
    prob.require(
        |d| {
            let lhs = Rewrite::new(field, &ee).apply(d, 0, 0)?.apply(mu, k, 0)?.finish();
            lhs.sub(&mu.then(d)?)
        },
        &zero,
    )?;
    prob.particular().ok_or_else(|| {
        Error::Infeasible(format!("the free-module monad has no Frobenius section ({})", prob.summary()))
    })
}

fn checked(b: &InternalAlgebra) -> Result<()> {
    let report = check_internal_algebra(b);
    if let Some(c) = report.failures().next() {
        return Err(Error::AxiomViolation { equation: c.name.clone(), detail: c.detail.clone().unwrap_or_default() });
    }
    Ok(())
}

/// Left `b`-modules, a right `A`-module.
pub fn module_from_internal_algebra(b: &InternalAlgebra, name: &str) -> Result<RightModule> {
    checked(b)?;
    let alg = &b.algebra;
    let field = &alg.field;
    let m = &alg.m;
    let a = &alg.a;
    let e = layers(a, &[(&b.b, 0), (m, 0)])?;
    let mu =
        Rewrite::new(field, &e.then(&e)?).swap(1)?.at(&alg.mu.inverse()?, 2)?.swap(0)?.apply(&b.mult, 0, 0)?.finish();
    let delta = solve_delta(field, &e, &mu)?;
    let monad = CondensationMonad { carrier: a.clone(), e, mu, delta };
    let s = condensation_split(field, &monad, name)?;
    let cond = s.condensation();
    let f = &s.f;
    let aa = a.boxed(a);
    let h = layers(&aa, &[(m, 0), (f, 0)])?;
    let cond_r = cond.whiskered(&TwoObject::unit(), a);
    let action =
        Rewrite::new(field, &cond_r.e.then(&h)?).at(&alg.mu, 1)?.swap(0)?.apply(&cond.absorb(field)?, 1, 0)?.finish();
    let d = descend(field, &cond_r, &h, &action, name)?;
    let n = d.h.clone();
    let bobj = s.b.clone();
    let t = bobj.len();

    let u = Rewrite::new(field, &layers(&aa.boxed(a), &[(f, 0), (&n, 0), (&n, 0)])?)
        .apply(&d.xi, 0, 0)?
        .apply(&d.xi, 1, 0)?
        .at(&alg.mu, 0)?
        .apply(&d.xi_inv, 1, 0)?
        .swap(0)?
        .finish();
    let baa = bobj.boxed(a).boxed(a);
    let nu = cond.whiskered(&TwoObject::unit(), &aa).descend_cell(
        field,
        &u,
        &layers(&baa, &[(&n, 0), (&n, 0)])?,
        &layers(&baa, &[(m, t), (&n, 0)])?,
    )?;
    let u = Rewrite::new(field, &layers(a, &[(f, 0), (&alg.i, t), (&n, 0)])?)
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&alg.rho, 0)?
        .finish();
    let rho = cond.descend_cell(field, &u, &layers(&bobj, &[(&alg.i, t), (&n, 0)])?, &Path::identity(&bobj))?;
    RightModule::new(name, alg, n, nu, rho)
}

/// Right `b`-modules, a left `A`-module.
pub fn left_module_from_internal_algebra(b: &InternalAlgebra, name: &str) -> Result<LeftModule> {
    checked(b)?;
    let alg = &b.algebra;
    let field = &alg.field;
    let (m, q) = (&alg.m, alg.len());
    let a = &alg.a;
    let e = layers(a, &[(&b.b, q), (m, 0)])?;
    let mu = Rewrite::new(field, &e.then(&e)?).swap(1)?.at(&alg.mu, 2)?.apply(&b.mult, 0, q)?.finish();
    let delta = solve_delta(field, &e, &mu)?;
    let monad = CondensationMonad { carrier: a.clone(), e, mu, delta };
    let s = condensation_split(field, &monad, name)?;
    let cond = s.condensation();
    let f = &s.f;
    let aa = a.boxed(a);
    let h = layers(&aa, &[(m, 0), (f, 0)])?;
    let cond_l = cond.whiskered(a, &TwoObject::unit());
    let action = Rewrite::new(field, &cond_l.e.then(&h)?)
        .at(&alg.mu.inverse()?, 1)?
        .swap(0)?
        .apply(&cond.absorb(field)?, 1, 0)?
        .finish();
    let d = descend(field, &cond_l, &h, &action, name)?;
    let l = d.h.clone();
    let bobj = s.b.clone();

    let u = Rewrite::new(field, &layers(&aa.boxed(a), &[(f, 2 * q), (m, 0), (&l, 0)])?)
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&alg.mu, 0)?
        .apply(&d.xi_inv, 1, 0)?
        .apply(&d.xi_inv, 0, q)?
        .finish();
    let aab = aa.boxed(&bobj);
    let kappa = cond.whiskered(&aa, &TwoObject::unit()).descend_cell(
        field,
        &u,
        &layers(&aab, &[(m, 0), (&l, 0)])?,
        &layers(&aab, &[(&l, q), (&l, 0)])?,
    )?;
    let u = Rewrite::new(field, &layers(a, &[(f, 0), (&alg.i, 0), (&l, 0)])?)
        .swap(0)?
        .apply(&d.xi, 1, 0)?
        .at(&alg.lambda, 0)?
        .finish();
    let lambda = cond.descend_cell(field, &u, &layers(&bobj, &[(&alg.i, 0), (&l, 0)])?, &Path::identity(&bobj))?;
    LeftModule::new(name, alg, l, kappa, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use crate::structures::{catalog, check_left_module, check_module, load_fusion_algebra, FusionData};

    fn alg(data: &FusionData) -> Arc<AlgebraObject> {
        Arc::new(load_fusion_algebra(data).unwrap())
    }

    #[test]
    fn unit_object_gives_the_regular_module() {
        for data in [catalog::vec_z2(&Field::rationals()), catalog::fibonacci()] {
            let a = alg(&data);
            let b = InternalAlgebra::trivial(&a).unwrap();
            assert!(check_internal_algebra(&b).passed());
            let r = module_from_internal_algebra(&b, "M").unwrap();
            assert_eq!(r.carrier.rank(), a.rank());
            assert!(check_module(&r).passed(), "{}", check_module(&r));
            let l = left_module_from_internal_algebra(&b, "M").unwrap();
            assert_eq!(l.carrier.rank(), a.rank());
            assert!(check_left_module(&l).passed(), "{}", check_left_module(&l));
        }
    }

    #[test]
    fn group_algebras_give_rank_one_modules() {
        for data in [catalog::vec_z2(&Field::rationals()), catalog::vec_z3(&Field::cyclotomic(3))] {
            let a = alg(&data);
            let b = InternalAlgebra::group_algebra(&a).unwrap();
            let report = check_internal_algebra(&b);
            assert!(report.passed(), "{report}");
            let r = module_from_internal_algebra(&b, "Vec").unwrap();
            assert_eq!(r.carrier.rank(), 1);
            assert!(check_module(&r).passed(), "{}", check_module(&r));
            let l = left_module_from_internal_algebra(&b, "Vec").unwrap();
            assert_eq!(l.carrier.rank(), 1);
            assert!(check_left_module(&l).passed(), "{}", check_left_module(&l));
        }
    }

    #[test]
    fn twisted_group_algebra_fails_associativity() {
        let a = alg(&catalog::vec_z2_omega(&Field::cyclotomic(4)));
        let b = InternalAlgebra::group_algebra(&a).unwrap();
        let report = check_internal_algebra(&b);
        assert!(!report.check("internalassociativity").unwrap().passed);
        assert!(module_from_internal_algebra(&b, "M").is_err());
    }
}
