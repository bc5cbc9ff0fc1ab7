//! Rigidity and separability of algebras, decided by exact linear algebra.
//!
//! The adjoint `m*` of the multiplication is its transpose with the canonical
//! unit and counit.  Its bimodule structure `(ψ^l, ψ^r)` is the pair of mates
//! of the multiplication's own bimodule structure, and every defining equation
//! is re-checked.  A section `γ^m` of the counit is found by solving the
//! section and bimodule conditions, which are linear in `γ^m`.

use crate::ambient::{adjoint1, CellProblem, Gen, Path, Rewrite, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::structures::AlgebraObject;

/// `m ⊣ m*` as bimodule 1-morphisms.
#[derive(Clone, Debug)]
pub struct RigidityWitness {
    pub m_star: Gen,
    /// `Id_{A□A} ⇒ m* ∘ m`
    pub eta: TwoCell,
    /// `m ∘ m* ⇒ Id_A`
    pub epsilon: TwoCell,
    /// `(m□1)(1□m*) ⇒ m* m`
    pub psi_l: TwoCell,
    /// `(1□m)(m*□1) ⇒ m* m`
    pub psi_r: TwoCell,
}

/// A bimodule section `γ^m: Id_A ⇒ m ∘ m*` of the counit.
#[derive(Clone, Debug)]
pub struct SeparabilityWitness {
    pub rigidity: RigidityWitness,
    pub gamma_m: TwoCell,
}

fn rewrite(alg: &AlgebraObject, obj: &TwoObject, layers: &[(&Gen, usize)]) -> Result<Rewrite> {
    let owned: Vec<_> = layers.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Ok(Rewrite::new(&alg.field, &Path::from_layers(obj, &owned)?))
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

/// The canonical adjunction for `m` and the mates `ψ^l`, `ψ^r`.
pub fn rigidity_candidate(alg: &AlgebraObject) -> Result<RigidityWitness> {
    let adj = adjoint1(&alg.field, &alg.m);
    let (m, ms, q) = (&alg.m, &adj.f_star, alg.len());
    let a2 = alg.power(2);
    let mu_inv = alg.mu.inverse()?;
    let psi_l =
        rewrite(alg, &a2, &[(ms, q), (m, 0)])?.apply(&adj.eta, 2, 0)?.at(&alg.mu, 1)?.at(&adj.epsilon, 0)?.finish();
    let psi_r =
        rewrite(alg, &a2, &[(ms, 0), (m, q)])?.apply(&adj.eta, 2, 0)?.at(&mu_inv, 1)?.at(&adj.epsilon, 0)?.finish();
    Ok(RigidityWitness { m_star: adj.f_star, eta: adj.eta, epsilon: adj.epsilon, psi_l, psi_r })
}

/// Every defining equation of a rigidity witness.
pub fn check_rigidity(alg: &AlgebraObject, w: &RigidityWitness) -> Report {
    let mut r = Report::new(format!("rigidity of {}", alg.name));
    let (m, ms, i, q) = (&alg.m, &w.m_star, &alg.i, alg.len());
    let (a, a2, a3) = (alg.a.clone(), alg.power(2), alg.power(3));
    let (mu, eta, eps, pl, pr) = (&alg.mu, &w.eta, &w.epsilon, &w.psi_l, &w.psi_r);
    let mu_inv = || alg.mu.inverse();
    for (name, cell) in [("ψ^l", pl), ("ψ^r", pr)] {
        if cell.is_invertible() {
            r.pass(&format!("{name} invertible"));
        } else {
            r.fail(&format!("{name} invertible"), "some block is singular");
        }
    }
    let id_m = || Path::from_layers(&a2, &[(m.clone(), 0)]).map(|p| TwoCell::identity(&alg.field, &p));
    let id_ms = || Path::from_layers(&a, &[(ms.clone(), 0)]).map(|p| TwoCell::identity(&alg.field, &p));
    let lhs = || Ok(rewrite(alg, &a2, &[(m, 0)])?.apply(eta, 0, 0)?.at(eps, 1)?.finish());
    record(&mut r, "snakem", lhs(), id_m());
    let lhs = || Ok(rewrite(alg, &a, &[(ms, 0)])?.apply(eta, 1, 0)?.at(eps, 0)?.finish());
    record(&mut r, "snakemstar", lhs(), id_ms());

    let lhs = || Ok(rewrite(alg, &a3, &[(ms, 2 * q), (m, 0), (m, 0)])?.swap(0)?.at(pl, 1)?.at(mu, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a3, &[(ms, 2 * q), (m, 0), (m, 0)])?.at(mu, 1)?.at(pl, 0)?.at(pl, 1)?.finish());
    record(&mut r, "rigidleftassociativity", lhs(), rhs());
    let lhs = || Ok(rewrite(alg, &a, &[(ms, 0), (i, 0), (m, 0)])?.swap(0)?.at(pl, 1)?.at(&alg.lambda, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a, &[(ms, 0), (i, 0), (m, 0)])?.at(&alg.lambda, 1)?.finish());
    record(&mut r, "rigidleftunit", lhs(), rhs());

    let lhs = || Ok(rewrite(alg, &a3, &[(ms, 0), (m, q), (m, q)])?.at(pr, 0)?.at(pr, 1)?.at(mu, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a3, &[(ms, 0), (m, q), (m, q)])?.at(mu, 1)?.swap(0)?.at(pr, 1)?.finish());
    record(&mut r, "rigidrightassociativity", lhs(), rhs());
    let lhs = || Ok(rewrite(alg, &a, &[(ms, 0), (i, 2 * q), (m, q)])?.swap(0)?.at(pr, 1)?.at(&alg.rho, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a, &[(ms, 0), (i, 2 * q), (m, q)])?.at(&alg.rho, 1)?.finish());
    record(&mut r, "rigidrightunit", lhs(), rhs());

    let lhs = || Ok(rewrite(alg, &a3, &[(ms, q), (m, 0), (m, q)])?.at(pl, 0)?.at(pr, 1)?.at(mu, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a3, &[(ms, q), (m, 0), (m, q)])?.swap(1)?.at(pr, 0)?.at(pl, 1)?.finish());
    record(&mut r, "rigidbimodule", lhs(), rhs());

    let lhs = || Ok(rewrite(alg, &a2, &[(ms, q), (m, q), (m, 0)])?.at(&mu_inv()?, 1)?.at(pl, 0)?.at(eps, 1)?.finish());
    let rhs = || Ok(rewrite(alg, &a2, &[(ms, q), (m, q), (m, 0)])?.at(eps, 0)?.finish());
    record(&mut r, "epsilonleft", lhs(), rhs());
    let lhs = || Ok(rewrite(alg, &a2, &[(ms, 0), (m, 0), (m, 0)])?.at(mu, 1)?.at(pr, 0)?.at(eps, 1)?.finish());
    let rhs = || Ok(rewrite(alg, &a2, &[(ms, 0), (m, 0), (m, 0)])?.at(eps, 0)?.finish());
    record(&mut r, "epsilonright", lhs(), rhs());

    let lhs = || Ok(rewrite(alg, &a3, &[(m, 0)])?.apply(eta, 0, q)?.at(pl, 1)?.at(&mu_inv()?, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a3, &[(m, 0)])?.apply(eta, 1, 0)?.finish());
    record(&mut r, "etaleft", lhs(), rhs());
    let lhs = || Ok(rewrite(alg, &a3, &[(m, q)])?.apply(eta, 0, 0)?.at(pr, 1)?.at(mu, 0)?.finish());
    let rhs = || Ok(rewrite(alg, &a3, &[(m, q)])?.apply(eta, 1, 0)?.finish());
    record(&mut r, "etaright", lhs(), rhs());
    r
}

/// A verified rigidity witness, or `Infeasible` naming the failed equations.
pub fn is_rigid(alg: &AlgebraObject) -> Result<RigidityWitness> {
    let w = rigidity_candidate(alg)?;
    let report = check_rigidity(alg, &w);
    if report.passed() {
        Ok(w)
    } else {
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        Err(Error::Infeasible(format!("no bimodule structure on m*: {} fail", failed.join(", "))))
    }
}

/// `γ ↦ (1□γ)` followed by the left structure of `m m*`.
fn gamma_left(alg: &AlgebraObject, w: &RigidityWitness, gamma: &TwoCell) -> Result<TwoCell> {
    let q = alg.len();
    Ok(rewrite(alg, &alg.power(2), &[(&alg.m, 0)])?
        .apply(gamma, 0, q)?
        .at(&alg.mu.inverse()?, 1)?
        .at(&w.psi_l, 0)?
        .finish())
}

fn gamma_right(alg: &AlgebraObject, w: &RigidityWitness, gamma: &TwoCell) -> Result<TwoCell> {
    Ok(rewrite(alg, &alg.power(2), &[(&alg.m, 0)])?.apply(gamma, 0, 0)?.at(&alg.mu, 1)?.at(&w.psi_r, 0)?.finish())
}

fn gamma_after(alg: &AlgebraObject, gamma: &TwoCell) -> Result<TwoCell> {
    Ok(rewrite(alg, &alg.power(2), &[(&alg.m, 0)])?.apply(gamma, 1, 0)?.finish())
}

/// Verifies the section condition and both bimodule conditions for `γ^m`.
pub fn check_separability(alg: &AlgebraObject, w: &SeparabilityWitness) -> Report {
    let mut r = Report::new(format!("separability of {}", alg.name));
    r.absorb("rigid", check_rigidity(alg, &w.rigidity));
    let id = TwoCell::identity(&alg.field, &Path::identity(&alg.a));
    record(&mut r, "gammasection", w.gamma_m.then(&w.rigidity.epsilon), Ok(id));
    record(&mut r, "gammaleft", gamma_left(alg, &w.rigidity, &w.gamma_m), gamma_after(alg, &w.gamma_m));
    record(&mut r, "gammaright", gamma_right(alg, &w.rigidity, &w.gamma_m), gamma_after(alg, &w.gamma_m));
    r
}

/// Solves for `γ^m`; `Infeasible` carries the size and rank of the system.
pub fn is_separable(alg: &AlgebraObject) -> Result<SeparabilityWitness> {
    let rigidity = is_rigid(alg)?;
    let id = Path::identity(&alg.a);
    let mm = Path::from_layers(&alg.a, &[(rigidity.m_star.clone(), 0), (alg.m.clone(), 0)])?;
    let mut prob = CellProblem::new(&alg.field, &id, &mm)?;
    prob.require(|g| g.then(&rigidity.epsilon), &TwoCell::identity(&alg.field, &id))?;
    let m_path = Path::from_layers(&alg.power(2), &[(alg.m.clone(), 0)])?;
    let mmm =
        Path::from_layers(&alg.power(2), &[(alg.m.clone(), 0), (rigidity.m_star.clone(), 0), (alg.m.clone(), 0)])?;
    let zero = TwoCell::zero(&alg.field, &m_path, &mmm)?;
    prob.require(|g| gamma_left(alg, &rigidity, g)?.sub(&gamma_after(alg, g)?), &zero)?;
    prob.require(|g| gamma_right(alg, &rigidity, g)?.sub(&gamma_after(alg, g)?), &zero)?;
    let gamma_m = prob
        .particular()
        .ok_or_else(|| Error::Infeasible(format!("no bimodule section of ε^m ({})", prob.summary())))?;
    let w = SeparabilityWitness { rigidity, gamma_m };
    let report = check_separability(alg, &w);
    if !report.passed() {
        return Err(Error::Infeasible(format!("solved γ^m does not verify:\n{report}")));
    }
    Ok(w)
}

/// Both ambients have a simple monoidal unit, so every non-zero algebra is
/// faithful.
pub fn faithful(alg: &AlgebraObject) -> bool {
    alg.rank() > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use crate::structures::catalog;
    use crate::structures::load_fusion_algebra;

    #[test]
    fn trivial_algebra_is_separable() {
        let q = Field::rationals();
        let alg = load_fusion_algebra(&catalog::vec(&q)).unwrap();
        let w = is_separable(&alg).unwrap();
        assert!(w.gamma_m.then(&w.rigidity.epsilon).unwrap().is_identity());
        assert!(faithful(&alg));
    }

    #[test]
    fn group_algebra_is_rigid_in_every_characteristic() {
        for f in [Field::rationals(), Field::prime(2)] {
            let alg = load_fusion_algebra(&catalog::vec_z2(&f)).unwrap();
            assert!(check_rigidity(&alg, &is_rigid(&alg).unwrap()).passed());
        }
    }

    #[test]
    fn graded_z2_separability_depends_on_the_characteristic() {
        let q = load_fusion_algebra(&catalog::vec_z2_graded(&Field::rationals())).unwrap();
        assert!(is_separable(&q).is_ok());
        let f2 = load_fusion_algebra(&catalog::vec_z2_graded(&Field::prime(2))).unwrap();
        match is_separable(&f2) {
            Err(Error::Infeasible(msg)) => assert!(msg.contains("rank"), "{msg}"),
            other => panic!("expected Infeasible, got {other:?}"),
        }
    }

    #[test]
    fn mutated_psi_fails_a_named_equation() {
        let alg = load_fusion_algebra(&catalog::vec_z2(&Field::rationals())).unwrap();
        let mut w = is_rigid(&alg).unwrap();
        w.psi_l = w.psi_l.scale(&alg.field.from_i64(2));
        let r = check_rigidity(&alg, &w);
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.name.starts_with("rigidleft") || c.name.starts_with("epsilon")));
    }
}
