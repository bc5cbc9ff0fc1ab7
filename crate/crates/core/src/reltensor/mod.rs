//! Relative tensor products of modules over a separable algebra.
//!
//! For a right `A`-module `M` and a left `A`-module `N`, the composite
//! `e = (n□l) ∘ (1□m*□1) ∘ (1□i□1)` on `M□N` carries a condensation monad
//! structure built from the separability witness of `A`.  Splitting it gives
//! `M□_A N` together with the universal balanced 1-morphism `t: M□N → M□_A N`.

mod bimodule;
mod coherence;

use std::sync::Arc;

pub use bimodule::{bimodule_tensor, induced_left, induced_right, BimoduleTensor, InducedLeft, InducedRight};
pub use coherence::{alpha_cell, check_bc_compatibility, l_cell, r_cell, AlphaCell, UnitorCell};

use crate::ambient::{
    condensation_split, descend, CellProblem, Condensation, CondensationMonad, Descended, Gen, Path, Rewrite,
    Splitting, TwoCell, TwoObject,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::separability::SeparabilityWitness;
use crate::structures::{check_balanced, AlgebraObject, Balanced1Morphism, LeftModule, RightModule};

pub(crate) fn layers(obj: &TwoObject, ls: &[(&Gen, usize)]) -> Result<Path> {
    let owned: Vec<_> = ls.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Path::from_layers(obj, &owned)
}

pub(crate) fn rewrite(alg: &AlgebraObject, obj: &TwoObject, ls: &[(&Gen, usize)]) -> Result<Rewrite> {
    Ok(Rewrite::new(&alg.field, &layers(obj, ls)?))
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

/// `(m□1)(1□m*)(1□i) ⇒ (1□m)(m*□1)(i□1)` on `A`, the core of `β^e`.
fn slide_cell(alg: &AlgebraObject, sep: &SeparabilityWitness) -> Result<TwoCell> {
    let w = &sep.rigidity;
    let (m, ms, i, q) = (&alg.m, &w.m_star, &alg.i, alg.len());
    Ok(rewrite(alg, &alg.a, &[(i, q), (ms, q), (m, 0)])?
        .at(&w.psi_l, 1)?
        .at(&alg.rho, 0)?
        .apply(&alg.lambda.inverse()?, 0, 0)?
        .at(&w.psi_r.inverse()?, 1)?
        .finish())
}

/// `c ∘ c ⇒ c` for `c = m* i`, with both copies merged by `m`, on the unit.
fn merge_cell(alg: &AlgebraObject, sep: &SeparabilityWitness) -> Result<TwoCell> {
    let w = &sep.rigidity;
    let (m, ms, i, q) = (&alg.m, &w.m_star, &alg.i, alg.len());
    Ok(rewrite(alg, &TwoObject::unit(), &[(i, 0), (ms, 0), (i, q), (ms, q), (m, 0), (m, q)])?
        .at(&w.psi_l, 3)?
        .at(&alg.rho, 2)?
        .at(&w.psi_r, 2)?
        .at(&w.epsilon, 1)?
        .finish())
}

/// The section of [`merge_cell`] built from `γ^m`.
fn split_cell(alg: &AlgebraObject, sep: &SeparabilityWitness) -> Result<TwoCell> {
    let w = &sep.rigidity;
    let (ms, i) = (&w.m_star, &alg.i);
    Ok(rewrite(alg, &TwoObject::unit(), &[(i, 0), (ms, 0)])?
        .apply(&sep.gamma_m, 1, 0)?
        .at(&w.psi_r.inverse()?, 2)?
        .apply(&alg.rho.inverse()?, 2, 0)?
        .at(&w.psi_l.inverse()?, 3)?
        .finish())
}

/// The condensation monad on `M□N` whose splitting is `M□_A N`.
pub fn build_condensation_monad(
    alg: &AlgebraObject,
    right: &RightModule,
    left: &LeftModule,
    sep: &SeparabilityWitness,
) -> Result<CondensationMonad> {
    if right.algebra.a != alg.a || left.algebra.a != alg.a {
        return Err(Error::InvalidInput("both modules must be over the given algebra".into()));
    }
    let (p, q) = (right.len(), alg.len());
    let x = right.carrier.boxed(&left.carrier);
    let (i, ms, n, l, m) = (&alg.i, &sep.rigidity.m_star, &right.n, &left.l, &alg.m);
    let e = layers(&x, &[(i, p), (ms, p), (n, 0), (l, p)])?;
    let ee = e.then(&e)?;
    let stacked = layers(&x, &[(i, p), (ms, p), (i, p + q), (ms, p + q), (n, 0), (n, 0), (l, p + q), (l, p)])?;
    let merged = layers(&x, &[(i, p), (ms, p), (i, p + q), (ms, p + q), (m, p), (m, p + q), (n, 0), (l, p)])?;
    let mixed = layers(&x, &[(i, p), (ms, p), (i, p + q), (ms, p + q), (m, p), (n, 0), (m, p), (l, p)])?;
    let kappa_inv = left.kappa.inverse()?;
    let nu_inv = right.nu.inverse()?;

    let mu = Rewrite::new(&alg.field, &ee)
        .reorder_to(&stacked)?
        .at(&right.nu, 4)?
        .at(&kappa_inv, 6)?
        .reorder_to(&merged)?
        .apply(&merge_cell(alg, sep)?, 0, p)?
        .finish();
    let delta = Rewrite::new(&alg.field, &e)
        .apply(&split_cell(alg, sep)?, 0, p)?
        .reorder_to(&mixed)?
        .at(&left.kappa, 6)?
        .at(&nu_inv, 4)?
        .reorder_to(&ee)?
        .finish();
    if mu.target() != &e || delta.target() != &ee {
        return Err(Error::DimensionMismatch("the monad structure cells have the wrong boundary".into()));
    }
    Ok(CondensationMonad { carrier: x, e, mu, delta })
}

/// The five condensation monad equations, checked exactly.
pub fn verify_monad(field: &crate::Field, m: &CondensationMonad) -> Report {
    let mut r = Report::new("condensation monad");
    let k = m.e.len();
    let ee = m.ee();
    let eee = m.eee();
    let id_e = TwoCell::identity(field, &m.e);
    record(&mut r, "condensation", m.delta.then(&m.mu), Ok(id_e));
    let lhs = || Ok(Rewrite::new(field, &eee).apply(&m.mu, 0, 0)?.apply(&m.mu, 0, 0)?.finish());
    let rhs = || Ok(Rewrite::new(field, &eee).apply(&m.mu, k, 0)?.apply(&m.mu, 0, 0)?.finish());
    record(&mut r, "monadassociativity", lhs(), rhs());
    let lhs = || Ok(Rewrite::new(field, &m.e).apply(&m.delta, 0, 0)?.apply(&m.delta, 0, 0)?.finish());
    let rhs = || Ok(Rewrite::new(field, &m.e).apply(&m.delta, 0, 0)?.apply(&m.delta, k, 0)?.finish());
    record(&mut r, "monadcoassociativity", lhs(), rhs());
    let mu_delta = || m.mu.then(&m.delta);
    let lhs = || Ok(Rewrite::new(field, &ee).apply(&m.delta, k, 0)?.apply(&m.mu, 0, 0)?.finish());
    record(&mut r, "frobeniusleft", lhs(), mu_delta());
    let lhs = || Ok(Rewrite::new(field, &ee).apply(&m.delta, 0, 0)?.apply(&m.mu, k, 0)?.finish());
    record(&mut r, "frobeniusright", lhs(), mu_delta());
    r
}

/// `M□_A N` with its universal balanced 1-morphism.
#[derive(Clone, Debug)]
pub struct RelativeTensor {
    pub algebra: Arc<AlgebraObject>,
    pub separability: SeparabilityWitness,
    pub monad: CondensationMonad,
    pub splitting: Splitting,
    pub condensation: Condensation,
    /// `t: M□N → M□_A N` with `β^t`
    pub t: Balanced1Morphism,
    /// `e ∘ (n□1) ⇒ e ∘ (1□l)` on `M□A□N`
    pub beta_e: TwoCell,
}

impl RelativeTensor {
    pub fn object(&self) -> &TwoObject {
        &self.splitting.b
    }

    pub fn right(&self) -> &RightModule {
        &self.t.right
    }

    pub fn left(&self) -> &LeftModule {
        &self.t.left
    }

    /// Wire counts `(|M|, |A|, |N|)`.
    fn widths(&self) -> (usize, usize, usize) {
        (self.right().len(), self.algebra.len(), self.left().len())
    }
}

fn beta_e(alg: &AlgebraObject, right: &RightModule, left: &LeftModule, sep: &SeparabilityWitness) -> Result<TwoCell> {
    let (p, q) = (right.len(), alg.len());
    let (i, ms, n, l, m) = (&alg.i, &sep.rigidity.m_star, &right.n, &left.l, &alg.m);
    let man = right.carrier.boxed(&alg.a).boxed(&left.carrier);
    let start = layers(&man, &[(n, 0), (i, p), (ms, p), (n, 0), (l, p)])?;
    let end = layers(&man, &[(l, p), (i, p), (ms, p), (n, 0), (l, p)])?;
    Ok(Rewrite::new(&alg.field, &start)
        .reorder_to(&layers(&man, &[(i, p + q), (ms, p + q), (n, 0), (n, 0), (l, p)])?)?
        .at(&right.nu, 2)?
        .apply(&slide_cell(alg, sep)?, 0, p)?
        .reorder_to(&layers(&man, &[(i, p), (ms, p), (n, 0), (m, p), (l, p)])?)?
        .at(&left.kappa, 3)?
        .reorder_to(&end)?
        .finish())
}

/// Splits the condensation monad and equips `t` with its balanced structure.
pub fn relative_tensor(
    alg: &Arc<AlgebraObject>,
    right: &RightModule,
    left: &LeftModule,
    sep: &SeparabilityWitness,
    name: &str,
) -> Result<RelativeTensor> {
    let monad = build_condensation_monad(alg, right, left, sep)?;
    let splitting = condensation_split(&alg.field, &monad, name)?;
    let cond = splitting.condensation();
    let be = beta_e(alg, right, left, sep)?;
    let f = &splitting.f;
    let man = right.carrier.boxed(&alg.a).boxed(&left.carrier);
    let beta_t = rewrite(alg, &man, &[(&right.n, 0), (f, 0)])?
        .apply(&splitting.gamma, 2, 0)?
        .apply(&splitting.theta, 1, 0)?
        .apply(&be, 0, 0)?
        .apply(&splitting.theta_inv, 1, 0)?
        .apply(&splitting.phi, 2, 0)?
        .finish();
    let t = Balanced1Morphism::new(right.clone(), left.clone(), f.clone(), beta_t)?;
    let report = check_balanced(&t);
    if !report.passed() {
        return Err(Error::AxiomViolation {
            equation: report.failures().next().map(|c| c.name.clone()).unwrap_or_default(),
            detail: format!("the universal 1-morphism of {name} is not balanced"),
        });
    }
    Ok(RelativeTensor {
        algebra: alg.clone(),
        separability: sep.clone(),
        monad,
        splitting,
        condensation: cond,
        t,
        beta_e: be,
    })
}

/// The right `e`-action `h ∘ e ⇒ h` induced by a balanced structure on `h`.
fn balanced_action(rt: &RelativeTensor, h: &Balanced1Morphism) -> Result<TwoCell> {
    let alg = &rt.algebra;
    let (p, q, _) = rt.widths();
    let (i, ms, n, l) = (&alg.i, &rt.separability.rigidity.m_star, &rt.right().n, &rt.left().l);
    let x = rt.monad.carrier.clone();
    Ok(rewrite(alg, &x, &[(i, p), (ms, p), (n, 0), (l, p), (&h.f, 0)])?
        .reorder_to(&layers(&x, &[(i, p), (ms, p), (l, p + q), (n, 0), (&h.f, 0)])?)?
        .at(&h.beta, 3)?
        .at(&h.left.kappa.inverse()?, 2)?
        .at(&rt.separability.rigidity.epsilon, 1)?
        .at(&h.left.lambda, 0)?
        .finish())
}

/// The factorization `h̃: M□_A N → Y` of a balanced `h` with `ξ: h̃ ∘ t ≅ h`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub h: Gen,
    /// `h̃ ∘ t ⇒ h`
    pub xi: TwoCell,
    pub xi_inv: TwoCell,
}

/// Factors a balanced 1-morphism through `t`.  The comparison `ξ` is checked
/// to intertwine `β^{h̃∘t}` and `β^h`.
pub fn factor_balanced(rt: &RelativeTensor, h: &Balanced1Morphism, name: &str) -> Result<Factorization> {
    if h.right.carrier != rt.right().carrier || h.left.carrier != rt.left().carrier {
        return Err(Error::InvalidInput(format!("`{}` is not balanced over M□N", h.f.name())));
    }
    let action = balanced_action(rt, h)?;
    let Descended { h: ht, xi, xi_inv, .. } =
        descend(&rt.algebra.field, &rt.condensation, &Path::generator(&h.f), &action, name)?;
    let p = rt.right().len();
    let man = rt.t.middle();
    let via_t = rewrite(&rt.algebra, &man, &[(&rt.right().n, 0), (&rt.t.f, 0), (&ht, 0)])?
        .apply(&rt.t.beta, 0, 0)?
        .apply(&xi, 1, 0)?
        .finish();
    let direct = rewrite(&rt.algebra, &man, &[(&rt.right().n, 0), (&rt.t.f, 0), (&ht, 0)])?
        .apply(&xi, 1, 0)?
        .apply(&h.beta, 0, 0)?
        .finish();
    if via_t != direct {
        return Err(Error::AxiomViolation {
            equation: "xibalanced".into(),
            detail: format!("ξ for `{name}` does not intertwine the balanced structures"),
        });
    }
    debug_assert_eq!(via_t.target(), &layers(&man, &[(&rt.left().l, p), (&h.f, 0)])?);
    Ok(Factorization { h: ht, xi, xi_inv })
}

/// The unique `ζ: u ⇒ v` with `ζ ∘ t = Γ`, for `Γ: u ∘ t ⇒ v ∘ t`.
///
/// Returns the solution and the dimension of the solution space; the
/// factorization is unique when that dimension is zero.
pub fn factor_balanced_2cell(rt: &RelativeTensor, u: &Path, v: &Path, gamma: &TwoCell) -> Result<(TwoCell, usize)> {
    let field = &rt.algebra.field;
    let f = &rt.condensation.f;
    let fu = f.then(u)?;
    let mut prob = CellProblem::new(field, u, v)?;
    prob.require(|z| z.apply_in(&fu, f.len(), 0), gamma)?;
    let zeta = prob
        .particular()
        .ok_or_else(|| Error::Infeasible(format!("Γ does not descend along t ({})", prob.summary())))?;
    Ok((zeta, prob.nullity()))
}

#[cfg(test)]
mod tests;
