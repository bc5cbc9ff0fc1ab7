//! Exhaustive axiom checkers.  Each equation is evaluated as two 2-cells
//! between the same composites and compared entry by entry.

use super::types::{
    AlgebraObject, Balanced1Morphism, Bimodule, BimoduleMap, LeftModule, LeftModuleMap, ModuleMap, RightModule,
};
use crate::ambient::{Path, Rewrite, TwoCell, TwoObject};
use crate::error::Result;
use crate::report::Report;

type Side = Result<TwoCell>;

fn compare(report: &mut Report, name: &str, lhs: Side, rhs: Side) {
    let outcome = match (lhs, rhs) {
        (Ok(l), Ok(r)) => match l.difference(&r) {
            None => Ok(()),
            Some(d) => Err(format!("sides differ at {d}")),
        },
        (Err(e), _) | (_, Err(e)) => Err(format!("could not evaluate: {e}")),
    };
    report.record(name, outcome);
}

fn invertible(report: &mut Report, name: &str, cell: &TwoCell) {
    if cell.is_invertible() {
        report.pass(&format!("{name} invertible"));
    } else {
        report.fail(&format!("{name} invertible"), "some block is singular");
    }
}

fn start(alg: &AlgebraObject, obj: &TwoObject, layers: &[(&crate::ambient::Gen, usize)]) -> Result<Rewrite> {
    let owned: Vec<_> = layers.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Ok(Rewrite::new(&alg.field, &Path::from_layers(obj, &owned)?))
}

pub fn check_algebra(alg: &AlgebraObject) -> Report {
    let mut r = Report::new(format!("algebra {}", alg.name));
    for (name, cell) in [("λ", &alg.lambda), ("μ", &alg.mu), ("ρ", &alg.rho)] {
        invertible(&mut r, name, cell);
    }
    let (m, i, q) = (&alg.m, &alg.i, alg.len());
    let (mu, lambda, rho) = (&alg.mu, &alg.lambda, &alg.rho);
    let a2 = alg.power(2);
    let a4 = alg.power(4);

    let lhs = || start(alg, &a4, &[(m, 0), (m, 0), (m, 0)])?.at(mu, 1)?.swap(0)?.at(mu, 1).map(Rewrite::finish);
    let rhs = || start(alg, &a4, &[(m, 0), (m, 0), (m, 0)])?.at(mu, 0)?.at(mu, 1)?.at(mu, 0).map(Rewrite::finish);
    compare(&mut r, "algebraassociativity", lhs(), rhs());

    let lhs = || start(alg, &a2, &[(i, q), (m, 0), (m, 0)])?.at(mu, 1)?.at(lambda, 0).map(Rewrite::finish);
    let rhs = || start(alg, &a2, &[(i, q), (m, 0), (m, 0)])?.at(rho, 0).map(Rewrite::finish);
    compare(&mut r, "algebraunitality", lhs(), rhs());

    let lhs = || start(alg, &a2, &[(i, 0), (m, 0), (m, 0)])?.at(mu, 1)?.swap(0)?.at(lambda, 1).map(Rewrite::finish);
    let rhs = || start(alg, &a2, &[(i, 0), (m, 0), (m, 0)])?.at(lambda, 0).map(Rewrite::finish);
    compare(&mut r, "coherenceleft", lhs(), rhs());

    let unit = TwoObject::unit();
    let lhs = || start(alg, &unit, &[(i, 0), (i, 0), (m, 0)])?.at(lambda, 1).map(Rewrite::finish);
    let rhs = || start(alg, &unit, &[(i, 0), (i, 0), (m, 0)])?.swap(0)?.at(rho, 1).map(Rewrite::finish);
    compare(&mut r, "coherencemiddle", lhs(), rhs());

    let lhs = || start(alg, &a2, &[(i, 2 * q), (m, 0), (m, 0)])?.at(mu, 1)?.at(rho, 0).map(Rewrite::finish);
    let rhs = || start(alg, &a2, &[(i, 2 * q), (m, 0), (m, 0)])?.swap(0)?.at(rho, 1).map(Rewrite::finish);
    compare(&mut r, "coherenceright", lhs(), rhs());
    r
}

pub fn check_module(md: &RightModule) -> Report {
    let mut r = Report::new(format!("right module {} over {}", md.name, md.algebra.name));
    invertible(&mut r, "ν", &md.nu);
    invertible(&mut r, "ρ^M", &md.rho);
    let alg = &md.algebra;
    let (i, n) = (&alg.i, &md.n);
    let (p, q) = (md.len(), alg.len());
    let (nu, rho_m) = (&md.nu, &md.rho);
    let maaa = md.carrier.boxed(&alg.power(3));
    let ma = md.carrier.boxed(&alg.a);

    let lhs = || start(alg, &maaa, &[(n, 0), (n, 0), (n, 0)])?.at(nu, 1)?.swap(0)?.at(nu, 1).map(Rewrite::finish);
    let rhs =
        || start(alg, &maaa, &[(n, 0), (n, 0), (n, 0)])?.at(nu, 0)?.at(nu, 1)?.at(&alg.mu, 0).map(Rewrite::finish);
    compare(&mut r, "moduleassociativity", lhs(), rhs());

    let lhs = || start(alg, &ma, &[(i, p), (n, 0), (n, 0)])?.at(nu, 1)?.at(&alg.lambda, 0).map(Rewrite::finish);
    let rhs = || start(alg, &ma, &[(i, p), (n, 0), (n, 0)])?.at(rho_m, 0).map(Rewrite::finish);
    compare(&mut r, "moduleunitality", lhs(), rhs());

    let lhs = || start(alg, &ma, &[(i, p + q), (n, 0), (n, 0)])?.at(nu, 1)?.at(&alg.rho, 0).map(Rewrite::finish);
    let rhs = || start(alg, &ma, &[(i, p + q), (n, 0), (n, 0)])?.swap(0)?.at(rho_m, 1).map(Rewrite::finish);
    compare(&mut r, "coherenceright", lhs(), rhs());
    r
}

pub fn check_left_module(md: &LeftModule) -> Report {
    let mut r = Report::new(format!("left module {} over {}", md.name, md.algebra.name));
    invertible(&mut r, "κ", &md.kappa);
    invertible(&mut r, "λ^M", &md.lambda);
    let alg = &md.algebra;
    let (m, i, l) = (&alg.m, &alg.i, &md.l);
    let q = alg.len();
    let kappa = &md.kappa;
    let aaam = alg.power(3).boxed(&md.carrier);
    let am = alg.a.boxed(&md.carrier);

    let lhs = || {
        start(alg, &aaam, &[(m, 0), (m, 0), (l, 0)])?.at(&alg.mu, 0)?.at(kappa, 1)?.at(kappa, 0).map(Rewrite::finish)
    };
    let rhs = || start(alg, &aaam, &[(m, 0), (m, 0), (l, 0)])?.at(kappa, 1)?.swap(0)?.at(kappa, 1).map(Rewrite::finish);
    compare(&mut r, "leftmoduleassociativity", lhs(), rhs());

    let lhs = || start(alg, &am, &[(i, q), (m, 0), (l, 0)])?.at(kappa, 1)?.at(&md.lambda, 0).map(Rewrite::finish);
    let rhs = || start(alg, &am, &[(i, q), (m, 0), (l, 0)])?.at(&alg.rho, 0).map(Rewrite::finish);
    compare(&mut r, "leftmoduleunitality", lhs(), rhs());
    r
}

/// Checks both one-sided structures and the two compatibilities with β.
pub fn check_bimodule(bm: &Bimodule) -> Report {
    let mut r = Report::new(format!("bimodule {} over ({}, {})", bm.name, bm.left.algebra.name, bm.right.algebra.name));
    r.absorb("left", check_left_module(&bm.left));
    r.absorb("right", check_module(&bm.right));
    invertible(&mut r, "β", &bm.beta);
    let (a, b) = (&bm.left.algebra, &bm.right.algebra);
    let (l, n, beta) = (&bm.left.l, &bm.right.n, &bm.beta);
    let aapb = a.power(2).boxed(bm.carrier()).boxed(&b.a);
    let apbb = a.a.boxed(bm.carrier()).boxed(&b.power(2));

    let lhs = || {
        start(a, &aapb, &[(&a.m, 0), (l, 0), (n, 0)])?
            .at(&bm.left.kappa, 0)?
            .at(beta, 1)?
            .at(beta, 0)
            .map(Rewrite::finish)
    };
    let rhs = || {
        start(a, &aapb, &[(&a.m, 0), (l, 0), (n, 0)])?.at(beta, 1)?.swap(0)?.at(&bm.left.kappa, 1).map(Rewrite::finish)
    };
    compare(&mut r, "leftbimoduleassociativity", lhs(), rhs());

    let lhs = || {
        start(a, &apbb, &[(l, 0), (n, 0), (n, 0)])?.at(beta, 0)?.at(beta, 1)?.at(&bm.right.nu, 0).map(Rewrite::finish)
    };
    let rhs =
        || start(a, &apbb, &[(l, 0), (n, 0), (n, 0)])?.at(&bm.right.nu, 1)?.swap(0)?.at(beta, 1).map(Rewrite::finish);
    compare(&mut r, "rightbimoduleassociativity", lhs(), rhs());
    r
}

pub fn check_module_map(mm: &ModuleMap) -> Report {
    let mut r = Report::new(format!("module map {}", mm.f.name()));
    invertible(&mut r, "ψ", &mm.psi);
    let alg = &mm.source.algebra;
    let (f, psi, nn) = (&mm.f, &mm.psi, &mm.target.n);
    let maa = mm.source.carrier.boxed(&alg.power(2));
    let m_only = mm.source.carrier.clone();

    let lhs = || {
        start(alg, &maa, &[(f, 0), (nn, 0), (nn, 0)])?.at(psi, 0)?.at(psi, 1)?.at(&mm.source.nu, 0).map(Rewrite::finish)
    };
    let rhs = || {
        start(alg, &maa, &[(f, 0), (nn, 0), (nn, 0)])?.at(&mm.target.nu, 1)?.swap(0)?.at(psi, 1).map(Rewrite::finish)
    };
    compare(&mut r, "modulemapassociativity", lhs(), rhs());

    let pn = mm.target.len();
    let lhs = || {
        start(alg, &m_only, &[(f, 0), (&alg.i, pn), (nn, 0)])?
            .swap(0)?
            .at(psi, 1)?
            .at(&mm.source.rho, 0)
            .map(Rewrite::finish)
    };
    let rhs = || start(alg, &m_only, &[(f, 0), (&alg.i, pn), (nn, 0)])?.at(&mm.target.rho, 1).map(Rewrite::finish);
    compare(&mut r, "modulemapunitality", lhs(), rhs());
    r
}

pub fn check_left_module_map(mm: &LeftModuleMap) -> Report {
    let mut r = Report::new(format!("left module map {}", mm.f.name()));
    invertible(&mut r, "χ", &mm.chi);
    let alg = &mm.source.algebra;
    let (f, chi, ln, q) = (&mm.f, &mm.chi, &mm.target.l, alg.len());
    let aam = alg.power(2).boxed(&mm.source.carrier);
    let m_only = mm.source.carrier.clone();

    let lhs = || {
        start(alg, &aam, &[(f, 2 * q), (&alg.m, 0), (ln, 0)])?
            .swap(0)?
            .at(chi, 1)?
            .at(&mm.source.kappa, 0)
            .map(Rewrite::finish)
    };
    let rhs = || {
        start(alg, &aam, &[(f, 2 * q), (&alg.m, 0), (ln, 0)])?
            .at(&mm.target.kappa, 1)?
            .at(chi, 0)?
            .at(chi, 1)
            .map(Rewrite::finish)
    };
    compare(&mut r, "leftmodulemapassociativity", lhs(), rhs());

    let lhs = || {
        start(alg, &m_only, &[(f, 0), (&alg.i, 0), (ln, 0)])?
            .swap(0)?
            .at(chi, 1)?
            .at(&mm.source.lambda, 0)
            .map(Rewrite::finish)
    };
    let rhs = || start(alg, &m_only, &[(f, 0), (&alg.i, 0), (ln, 0)])?.at(&mm.target.lambda, 1).map(Rewrite::finish);
    compare(&mut r, "leftmodulemapunitality", lhs(), rhs());
    r
}

pub fn check_bimodule_map(bm: &BimoduleMap) -> Report {
    let mut r = Report::new(format!("bimodule map {}", bm.f.name()));
    match bm.left() {
        Ok(l) => r.absorb("left", check_left_module_map(&l)),
        Err(e) => r.fail("left", e.to_string()),
    }
    match bm.right() {
        Ok(m) => r.absorb("right", check_module_map(&m)),
        Err(e) => r.fail("right", e.to_string()),
    }
    let a = &bm.source.left.algebra;
    let (f, chi, psi) = (&bm.f, &bm.chi, &bm.psi);
    let (lq, nq) = (&bm.target.left.l, &bm.target.right.n);
    let apb = bm.source.outer();
    let qa = a.len();
    let lhs = || {
        start(a, &apb, &[(f, qa), (lq, 0), (nq, 0)])?
            .at(chi, 0)?
            .at(psi, 1)?
            .at(&bm.source.beta, 0)
            .map(Rewrite::finish)
    };
    let rhs = || {
        start(a, &apb, &[(f, qa), (lq, 0), (nq, 0)])?
            .at(&bm.target.beta, 1)?
            .at(psi, 0)?
            .at(chi, 1)
            .map(Rewrite::finish)
    };
    compare(&mut r, "bimodulemapassociativity", lhs(), rhs());
    r
}

pub fn check_balanced(b: &Balanced1Morphism) -> Report {
    let mut r = Report::new(format!("balanced 1-morphism {}", b.f.name()));
    invertible(&mut r, "β^f", &b.beta);
    let alg = b.algebra().clone();
    let (n, f, beta) = (&b.right.n, &b.f, &b.beta);
    let pm = b.right.len();
    let maan = b.right.carrier.boxed(&alg.power(2)).boxed(&b.left.carrier);
    let mn = b.right.carrier.boxed(&b.left.carrier);
    let kappa_inv = b.left.kappa.inverse();

    let lhs = || start(&alg, &maan, &[(n, 0), (n, 0), (f, 0)])?.at(&b.right.nu, 0)?.at(beta, 1).map(Rewrite::finish);
    let rhs = || {
        let k = kappa_inv.clone()?;
        start(&alg, &maan, &[(n, 0), (n, 0), (f, 0)])?.at(beta, 1)?.swap(0)?.at(beta, 1)?.at(&k, 0).map(Rewrite::finish)
    };
    compare(&mut r, "balancedassociativity", lhs(), rhs());

    let lhs = || start(&alg, &mn, &[(&alg.i, pm), (n, 0), (f, 0)])?.at(&b.right.rho, 0).map(Rewrite::finish);
    let rhs =
        || start(&alg, &mn, &[(&alg.i, pm), (n, 0), (f, 0)])?.at(beta, 1)?.at(&b.left.lambda, 0).map(Rewrite::finish);
    compare(&mut r, "balancedunitality", lhs(), rhs());
    r
}

pub fn check_internal_algebra(b: &super::internal::InternalAlgebra) -> Report {
    let alg = &b.algebra;
    let mut r = Report::new(format!("internal algebra {} in {}", b.name, alg.name));
    let (m, i, q) = (&alg.m, &alg.i, alg.len());
    let (mb, ub, bg) = (&b.mult, &b.unit, &b.b);
    let unit = TwoObject::unit();

    let bbb = [(bg, 0), (bg, q), (bg, 2 * q), (m, 0), (m, 0)];
    let lhs = || start(alg, &unit, &bbb)?.swap(2)?.apply(mb, 0, 0)?.apply(mb, 0, 0).map(Rewrite::finish);
    let rhs = || start(alg, &unit, &bbb)?.at(&alg.mu, 3)?.apply(mb, 1, q)?.apply(mb, 0, 0).map(Rewrite::finish);
    compare(&mut r, "internalassociativity", lhs(), rhs());

    let lhs = || start(alg, &unit, &[(i, 0), (bg, q), (m, 0)])?.apply(ub, 0, 0)?.apply(mb, 0, 0).map(Rewrite::finish);
    let rhs = || start(alg, &unit, &[(i, 0), (bg, q), (m, 0)])?.swap(0)?.at(&alg.lambda, 1).map(Rewrite::finish);
    compare(&mut r, "internalunitleft", lhs(), rhs());

    let lhs = || start(alg, &unit, &[(bg, 0), (i, q), (m, 0)])?.apply(ub, 1, q)?.apply(mb, 0, 0).map(Rewrite::finish);
    let rhs = || start(alg, &unit, &[(bg, 0), (i, q), (m, 0)])?.at(&alg.rho, 1).map(Rewrite::finish);
    compare(&mut r, "internalunitright", lhs(), rhs());
    r
}
