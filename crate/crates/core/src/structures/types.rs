use std::sync::Arc;

use crate::ambient::{Config, Gen, Path, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement};

/// `(source path, target path, coefficient)` triples of a structure 2-cell.
pub type Entries = Vec<(Config, Config, FieldElement)>;

fn path(obj: &TwoObject, layers: &[(&Gen, usize)]) -> Result<Path> {
    let owned: Vec<(Gen, usize)> = layers.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Path::from_layers(obj, &owned)
}

fn typed(name: &str, cell: &TwoCell, src: &Path, tgt: &Path) -> Result<()> {
    if cell.source() != src || cell.target() != tgt {
        return Err(Error::DimensionMismatch(format!(
            "`{name}` must go from {src:?} to {tgt:?}, found {:?} ⇒ {:?}",
            cell.source(),
            cell.target()
        )));
    }
    Ok(())
}

fn unit() -> TwoObject {
    TwoObject::unit()
}

/// An algebra `(A, m, i, λ, μ, ρ)` with
/// `λ: m(i□1) ⇒ 1`, `μ: m(m□1) ⇒ m(1□m)` and `ρ: m(1□i) ⇒ 1`.
#[derive(Clone, Debug)]
pub struct AlgebraObject {
    pub name: String,
    pub field: Field,
    pub a: TwoObject,
    pub m: Gen,
    pub i: Gen,
    pub lambda: TwoCell,
    pub mu: TwoCell,
    pub rho: TwoCell,
}

impl AlgebraObject {
    pub fn new(
        name: &str,
        field: &Field,
        m: Gen,
        i: Gen,
        lambda: TwoCell,
        mu: TwoCell,
        rho: TwoCell,
    ) -> Result<AlgebraObject> {
        let a = m.target().clone();
        if *m.source() != a.boxed(&a) || *i.source() != unit() || *i.target() != a {
            return Err(Error::DimensionMismatch(format!("`{name}`: m must be A□A → A and i must be I → A")));
        }
        let alg = AlgebraObject { name: name.into(), field: field.clone(), a, m, i, lambda, mu, rho };
        typed("μ", &alg.mu, &alg.m_m1()?, &alg.m_1m()?)?;
        typed("λ", &alg.lambda, &alg.m_i1()?, &Path::identity(&alg.a))?;
        typed("ρ", &alg.rho, &alg.m_1i()?, &Path::identity(&alg.a))?;
        Ok(alg)
    }

    /// Builds the structure cells from entry lists against the canonical boundaries.
    pub fn from_entries(
        name: &str,
        field: &Field,
        m: Gen,
        i: Gen,
        lambda: Entries,
        mu: Entries,
        rho: Entries,
    ) -> Result<AlgebraObject> {
        let a = m.target().clone();
        let q = a.len();
        let a2 = a.boxed(&a);
        let a3 = a2.boxed(&a);
        let id = Path::identity(&a);
        let mu = TwoCell::from_entries(field, &path(&a3, &[(&m, 0), (&m, 0)])?, &path(&a3, &[(&m, q), (&m, 0)])?, mu)?;
        let lambda = TwoCell::from_entries(field, &path(&a, &[(&i, 0), (&m, 0)])?, &id, lambda)?;
        let rho = TwoCell::from_entries(field, &path(&a, &[(&i, q), (&m, 0)])?, &id, rho)?;
        AlgebraObject::new(name, field, m, i, lambda, mu, rho)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn rank(&self) -> usize {
        self.a.rank()
    }

    pub fn power(&self, k: usize) -> TwoObject {
        (0..k).fold(TwoObject::unit(), |acc, _| acc.boxed(&self.a))
    }

    /// `m(m□1)` on `A□A□A`.
    pub fn m_m1(&self) -> Result<Path> {
        path(&self.power(3), &[(&self.m, 0), (&self.m, 0)])
    }

    /// `m(1□m)` on `A□A□A`.
    pub fn m_1m(&self) -> Result<Path> {
        path(&self.power(3), &[(&self.m, self.len()), (&self.m, 0)])
    }

    pub fn m_i1(&self) -> Result<Path> {
        path(&self.a, &[(&self.i, 0), (&self.m, 0)])
    }

    pub fn m_1i(&self) -> Result<Path> {
        path(&self.a, &[(&self.i, self.len()), (&self.m, 0)])
    }

    pub fn with_name(mut self, name: &str) -> AlgebraObject {
        self.name = name.into();
        self
    }
}

/// A right module `(M, n, ν, ρ^M)` with `ν: n(n□1) ⇒ n(1□m)` and `ρ^M: n(1□i) ⇒ 1`.
#[derive(Clone, Debug)]
pub struct RightModule {
    pub name: String,
    pub algebra: Arc<AlgebraObject>,
    pub carrier: TwoObject,
    pub n: Gen,
    pub nu: TwoCell,
    pub rho: TwoCell,
}

impl RightModule {
    pub fn new(name: &str, algebra: &Arc<AlgebraObject>, n: Gen, nu: TwoCell, rho: TwoCell) -> Result<RightModule> {
        let carrier = n.target().clone();
        if *n.source() != carrier.boxed(&algebra.a) {
            return Err(Error::DimensionMismatch(format!("`{name}`: the action must be M□A → M")));
        }
        let md = RightModule { name: name.into(), algebra: algebra.clone(), carrier, n, nu, rho };
        typed("ν", &md.nu, &md.n_n1()?, &md.n_1m()?)?;
        typed("ρ^M", &md.rho, &md.n_1i()?, &Path::identity(&md.carrier))?;
        Ok(md)
    }

    pub fn from_entries(
        name: &str,
        algebra: &Arc<AlgebraObject>,
        n: Gen,
        nu: Entries,
        rho: Entries,
    ) -> Result<RightModule> {
        let f = &algebra.field;
        let carrier = n.target().clone();
        let p = carrier.len();
        let maa = carrier.boxed(&algebra.power(2));
        let nu =
            TwoCell::from_entries(f, &path(&maa, &[(&n, 0), (&n, 0)])?, &path(&maa, &[(&algebra.m, p), (&n, 0)])?, nu)?;
        let rho =
            TwoCell::from_entries(f, &path(&carrier, &[(&algebra.i, p), (&n, 0)])?, &Path::identity(&carrier), rho)?;
        RightModule::new(name, algebra, n, nu, rho)
    }

    /// The algebra acting on itself from the right.
    pub fn regular(algebra: &Arc<AlgebraObject>) -> RightModule {
        RightModule {
            name: format!("{}_right", algebra.name),
            algebra: algebra.clone(),
            carrier: algebra.a.clone(),
            n: algebra.m.clone(),
            nu: algebra.mu.clone(),
            rho: algebra.rho.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn n_n1(&self) -> Result<Path> {
        path(&self.carrier.boxed(&self.algebra.power(2)), &[(&self.n, 0), (&self.n, 0)])
    }

    pub fn n_1m(&self) -> Result<Path> {
        path(&self.carrier.boxed(&self.algebra.power(2)), &[(&self.algebra.m, self.len()), (&self.n, 0)])
    }

    pub fn n_1i(&self) -> Result<Path> {
        path(&self.carrier, &[(&self.algebra.i, self.len()), (&self.n, 0)])
    }
}

/// A left module `(M, l, κ, λ^M)` with `κ: l(m□1) ⇒ l(1□l)` and `λ^M: l(i□1) ⇒ 1`.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub name: String,
    pub algebra: Arc<AlgebraObject>,
    pub carrier: TwoObject,
    pub l: Gen,
    pub kappa: TwoCell,
    pub lambda: TwoCell,
}

impl LeftModule {
    pub fn new(
        name: &str,
        algebra: &Arc<AlgebraObject>,
        l: Gen,
        kappa: TwoCell,
        lambda: TwoCell,
    ) -> Result<LeftModule> {
        let carrier = l.target().clone();
        if *l.source() != algebra.a.boxed(&carrier) {
            return Err(Error::DimensionMismatch(format!("`{name}`: the action must be A□M → M")));
        }
        let md = LeftModule { name: name.into(), algebra: algebra.clone(), carrier, l, kappa, lambda };
        typed("κ", &md.kappa, &md.l_m1()?, &md.l_1l()?)?;
        typed("λ^M", &md.lambda, &md.l_i1()?, &Path::identity(&md.carrier))?;
        Ok(md)
    }

    pub fn from_entries(
        name: &str,
        algebra: &Arc<AlgebraObject>,
        l: Gen,
        kappa: Entries,
        lambda: Entries,
    ) -> Result<LeftModule> {
        let f = &algebra.field;
        let carrier = l.target().clone();
        let q = algebra.len();
        let aam = algebra.power(2).boxed(&carrier);
        let kappa = TwoCell::from_entries(
            f,
            &path(&aam, &[(&algebra.m, 0), (&l, 0)])?,
            &path(&aam, &[(&l, q), (&l, 0)])?,
            kappa,
        )?;
        let lambda =
            TwoCell::from_entries(f, &path(&carrier, &[(&algebra.i, 0), (&l, 0)])?, &Path::identity(&carrier), lambda)?;
        LeftModule::new(name, algebra, l, kappa, lambda)
    }

    /// The algebra acting on itself from the left.
    pub fn regular(algebra: &Arc<AlgebraObject>) -> LeftModule {
        LeftModule {
            name: format!("{}_left", algebra.name),
            algebra: algebra.clone(),
            carrier: algebra.a.clone(),
            l: algebra.m.clone(),
            kappa: algebra.mu.clone(),
            lambda: algebra.lambda.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn l_m1(&self) -> Result<Path> {
        path(&self.algebra.power(2).boxed(&self.carrier), &[(&self.algebra.m, 0), (&self.l, 0)])
    }

    pub fn l_1l(&self) -> Result<Path> {
        path(&self.algebra.power(2).boxed(&self.carrier), &[(&self.l, self.algebra.len()), (&self.l, 0)])
    }

    pub fn l_i1(&self) -> Result<Path> {
        path(&self.carrier, &[(&self.algebra.i, 0), (&self.l, 0)])
    }
}

/// An `A`-`B` bimodule: a left `A`-module and a right `B`-module on one carrier,
/// with `β: n(l□1) ⇒ l(1□n)`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub name: String,
    pub left: LeftModule,
    pub right: RightModule,
    pub beta: TwoCell,
}

impl Bimodule {
    pub fn new(name: &str, left: LeftModule, right: RightModule, beta: TwoCell) -> Result<Bimodule> {
        if left.carrier != right.carrier {
            return Err(Error::DimensionMismatch(format!(
                "`{name}`: left and right actions live on different carriers"
            )));
        }
        let bm = Bimodule { name: name.into(), left, right, beta };
        typed("β", &bm.beta, &bm.n_l1()?, &bm.l_1n()?)?;
        Ok(bm)
    }

    pub fn from_entries(name: &str, left: LeftModule, right: RightModule, beta: Entries) -> Result<Bimodule> {
        let f = left.algebra.field.clone();
        let (src, tgt) = beta_boundary(&left, &right)?;
        let beta = TwoCell::from_entries(&f, &src, &tgt, beta)?;
        Bimodule::new(name, left, right, beta)
    }

    /// The algebra as a bimodule over itself.
    pub fn identity(algebra: &Arc<AlgebraObject>) -> Bimodule {
        Bimodule {
            name: format!("{}_id", algebra.name),
            left: LeftModule::regular(algebra),
            right: RightModule::regular(algebra),
            beta: algebra.mu.clone(),
        }
    }

    pub fn carrier(&self) -> &TwoObject {
        &self.left.carrier
    }

    /// `A□P□B`
    pub fn outer(&self) -> TwoObject {
        self.left.algebra.a.boxed(self.carrier()).boxed(&self.right.algebra.a)
    }

    pub fn n_l1(&self) -> Result<Path> {
        Ok(beta_boundary(&self.left, &self.right)?.0)
    }

    pub fn l_1n(&self) -> Result<Path> {
        Ok(beta_boundary(&self.left, &self.right)?.1)
    }
}

/// `n(l□1)` and `l(1□n)` on `A□P□B`.
fn beta_boundary(left: &LeftModule, right: &RightModule) -> Result<(Path, Path)> {
    let outer = left.algebra.a.boxed(&left.carrier).boxed(&right.algebra.a);
    Ok((path(&outer, &[(&left.l, 0), (&right.n, 0)])?, path(&outer, &[(&right.n, left.algebra.len()), (&left.l, 0)])?))
}

/// A right module map `f: M → N` with `ψ: n^N(f□1) ⇒ f n^M`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: RightModule,
    pub target: RightModule,
    pub f: Gen,
    pub psi: TwoCell,
}

impl ModuleMap {
    pub fn new(source: RightModule, target: RightModule, f: Gen, psi: TwoCell) -> Result<ModuleMap> {
        let mm = ModuleMap { source, target, f, psi };
        typed("ψ", &mm.psi, &mm.n_f1()?, &mm.f_n()?)?;
        Ok(mm)
    }

    pub fn n_f1(&self) -> Result<Path> {
        path(&self.source.carrier.boxed(&self.source.algebra.a), &[(&self.f, 0), (&self.target.n, 0)])
    }

    pub fn f_n(&self) -> Result<Path> {
        path(&self.source.carrier.boxed(&self.source.algebra.a), &[(&self.source.n, 0), (&self.f, 0)])
    }
}

/// A left module map `f: M → N` with `χ: l^N(1□f) ⇒ f l^M`.
#[derive(Clone, Debug)]
pub struct LeftModuleMap {
    pub source: LeftModule,
    pub target: LeftModule,
    pub f: Gen,
    pub chi: TwoCell,
}

impl LeftModuleMap {
    pub fn new(source: LeftModule, target: LeftModule, f: Gen, chi: TwoCell) -> Result<LeftModuleMap> {
        let mm = LeftModuleMap { source, target, f, chi };
        typed("χ", &mm.chi, &mm.l_1f()?, &mm.f_l()?)?;
        Ok(mm)
    }

    pub fn l_1f(&self) -> Result<Path> {
        let a = &self.source.algebra;
        path(&a.a.boxed(&self.source.carrier), &[(&self.f, a.len()), (&self.target.l, 0)])
    }

    pub fn f_l(&self) -> Result<Path> {
        let a = &self.source.algebra;
        path(&a.a.boxed(&self.source.carrier), &[(&self.source.l, 0), (&self.f, 0)])
    }
}

/// A bimodule map: one 1-morphism with compatible left and right structures.
#[derive(Clone, Debug)]
pub struct BimoduleMap {
    pub source: Bimodule,
    pub target: Bimodule,
    pub f: Gen,
    pub chi: TwoCell,
    pub psi: TwoCell,
}

impl BimoduleMap {
    pub fn new(source: Bimodule, target: Bimodule, f: Gen, chi: TwoCell, psi: TwoCell) -> Result<BimoduleMap> {
        let bm = BimoduleMap { source, target, f, chi, psi };
        bm.left()?;
        bm.right()?;
        Ok(bm)
    }

    pub fn left(&self) -> Result<LeftModuleMap> {
        LeftModuleMap::new(self.source.left.clone(), self.target.left.clone(), self.f.clone(), self.chi.clone())
    }

    pub fn right(&self) -> Result<ModuleMap> {
        ModuleMap::new(self.source.right.clone(), self.target.right.clone(), self.f.clone(), self.psi.clone())
    }
}

/// An `A`-balanced 1-morphism `f: M□N → C` with `β^f: f(n□1) ⇒ f(1□l)`.
#[derive(Clone, Debug)]
pub struct Balanced1Morphism {
    pub right: RightModule,
    pub left: LeftModule,
    pub f: Gen,
    pub beta: TwoCell,
}

impl Balanced1Morphism {
    pub fn new(right: RightModule, left: LeftModule, f: Gen, beta: TwoCell) -> Result<Balanced1Morphism> {
        if !Arc::ptr_eq(&right.algebra, &left.algebra) && right.algebra.a != left.algebra.a {
            return Err(Error::InvalidInput("balanced 1-morphisms need modules over one algebra".into()));
        }
        if *f.source() != right.carrier.boxed(&left.carrier) {
            return Err(Error::DimensionMismatch(format!("`{}` must start at M□N", f.name())));
        }
        let b = Balanced1Morphism { right, left, f, beta };
        typed("β^f", &b.beta, &b.f_n1()?, &b.f_1l()?)?;
        Ok(b)
    }

    pub fn algebra(&self) -> &Arc<AlgebraObject> {
        &self.right.algebra
    }

    /// `M□A□N`
    pub fn middle(&self) -> TwoObject {
        self.right.carrier.boxed(&self.algebra().a).boxed(&self.left.carrier)
    }

    pub fn f_n1(&self) -> Result<Path> {
        path(&self.middle(), &[(&self.right.n, 0), (&self.f, 0)])
    }

    pub fn f_1l(&self) -> Result<Path> {
        path(&self.middle(), &[(&self.left.l, self.right.len()), (&self.f, 0)])
    }
}
