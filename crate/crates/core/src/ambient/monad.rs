use std::collections::BTreeMap;

use super::cell::TwoCell;
use super::generator::{Gen, Generator};
use super::object::{Labels, TwoObject, Wire};
use super::path::{Config, Path};
use crate::error::{Error, Result};
use crate::scalars::{decompose_adapted, AssocAlgebra, Field, FieldElement, LinearSystem, Vector};

/// A 2-condensation monad `(X, e, μ, δ)`.
#[derive(Clone, Debug)]
pub struct CondensationMonad {
    pub carrier: TwoObject,
    pub e: Path,
    /// `e ∘ e ⇒ e`
    pub mu: TwoCell,
    /// `e ⇒ e ∘ e`
    pub delta: TwoCell,
}

impl CondensationMonad {
    pub fn ee(&self) -> Path {
        self.e.then(&self.e).expect("e is an endomorphism")
    }

    pub fn eee(&self) -> Path {
        self.ee().then(&self.e).expect("e is an endomorphism")
    }
}

/// A splitting `(B, f, g, φ, γ, θ)` of a condensation monad.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub b: TwoObject,
    /// the split monad's underlying 1-morphism
    pub e: Path,
    /// `X → B`
    pub f: Gen,
    /// `B → X`
    pub g: Gen,
    /// `f ∘ g ⇒ Id_B`
    pub phi: TwoCell,
    /// `Id_B ⇒ f ∘ g`
    pub gamma: TwoCell,
    /// `g ∘ f ⇒ e`
    pub theta: TwoCell,
    pub theta_inv: TwoCell,
    /// Matrix units of the flattened monad algebra, per simple of B, as
    /// combinations of basis paths of e.
    pub matrix_units: Vec<Vec<Vec<Vec<(Config, FieldElement)>>>>,
}

impl Splitting {
    /// `g ∘ f` as a composite.
    pub fn gf(&self) -> Path {
        Path::generator(&self.f).push(&self.g, 0).expect("g after f")
    }

    /// `f ∘ g` as a composite.
    pub fn fg(&self) -> Path {
        Path::generator(&self.g).push(&self.f, 0).expect("f after g")
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }
}

/// The flattening of a monad: basis = basis paths of e, product from μ.
#[derive(Clone, Debug)]
pub struct FlatMonad {
    pub algebra: AssocAlgebra,
    pub basis: Vec<Config>,
    /// per simple of the carrier: the component of the unit supported there
    pub local_units: Vec<(Labels, Vector)>,
}

/// Flattens `m` to an associative algebra.  The product `x · y` of basis paths
/// `y: s → u` and `x: u → t` is `μ` applied to the composite path "y then x".
pub fn flatten_monad(field: &Field, m: &CondensationMonad) -> Result<FlatMonad> {
    let basis = m.e.configs();
    let index: BTreeMap<&Config, usize> = basis.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let nx = m.carrier.len();
    let n = basis.len();
    let mut by_source: BTreeMap<Labels, Vec<usize>> = BTreeMap::new();
    for (i, c) in basis.iter().enumerate() {
        by_source.entry(c[..nx].to_vec()).or_default().push(i);
    }
    let targets: Vec<Labels> = basis.iter().map(|c| m.e.target_labels(c)).collect();
    let mut products = vec![Vec::new(); n * n];
    for (yi, y) in basis.iter().enumerate() {
        let u = &targets[yi];
        for &xi in by_source.get(u).map(|v| &v[..]).unwrap_or(&[]) {
            let mut comp = y.clone();
            comp.extend_from_slice(&basis[xi][nx..]);
            let row = m.mu.row(&comp);
            products[xi * n + yi] = row
                .iter()
                .map(|(d, v)| {
                    let k =
                        *index.get(d).ok_or_else(|| Error::InvalidInput(format!("μ produced unknown path {d:?}")))?;
                    Ok((k, v.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
        }
    }
    let algebra = AssocAlgebra::from_products(field, n, products)?;
    let unit = algebra.unit().ok_or_else(|| Error::NotSemisimple("the flattened monad algebra has no unit".into()))?;
    let mut local: BTreeMap<Labels, Vector> = BTreeMap::new();
    for (i, c) in basis.iter().enumerate() {
        if unit[i].is_zero() {
            continue;
        }
        let s = c[..nx].to_vec();
        if targets[i] != s {
            return Err(Error::NotSemisimple("the unit of the flattened monad is not diagonal".into()));
        }
        local.entry(s).or_insert_with(|| vec![field.zero(); n])[i] = unit[i].clone();
    }
    let local_units = local.into_iter().collect();
    Ok(FlatMonad { algebra: algebra.with_unit(unit)?, basis, local_units })
}

/// Splits a condensation monad by decomposing its flattened algebra.
///
/// `name` names the new wire.  The result satisfies `φ·γ = Id`,
/// `μ·(θ∘θ) = θ·(g φ f)` and `(θ∘θ)·(g γ f) = δ·θ` exactly; these are checked
/// before returning.
pub fn condensation_split(field: &Field, m: &CondensationMonad, name: &str) -> Result<Splitting> {
    let flat = flatten_monad(field, m)?;
    let locals: Vec<Vector> = flat.local_units.iter().map(|(_, v)| v.clone()).collect();
    let dec = decompose_adapted(&flat.algebra, &locals)?;
    let x = &m.carrier;
    let nx = x.len();
    let group = x.group();
    // Row index i of block k lives at simple s(k, i) of X.
    let sites: Vec<Vec<Labels>> =
        dec.blocks.iter().map(|b| b.local_unit_of.iter().map(|&u| flat.local_units[u].0.clone()).collect()).collect();
    let r = dec.blocks.len() as u32;
    let wire = match &group {
        Some(gp) if x.is_graded() => {
            let grades = sites.iter().map(|s| x.grade(&s[0]).map(|g| g as u32).unwrap_or(0)).collect::<Vec<_>>();
            Wire::graded(name, gp, grades)?
        }
        _ => Wire::new(name, r),
    };
    let b = TwoObject::single(wire);
    let mut f_entries = Vec::new();
    for (k, s) in sites.iter().enumerate() {
        for site in s {
            f_entries.push((site.clone(), vec![k as u32], 1));
        }
    }
    let f = Generator::new(&format!("{name}.f"), x.clone(), b.clone(), f_entries.clone())?;
    let g = Generator::new(
        &format!("{name}.g"),
        b.clone(),
        x.clone(),
        f_entries.iter().map(|(s, k, m)| (k.clone(), s.clone(), *m)),
    )?;
    // multiplicity index of row i of block k among rows at the same site
    let mult: Vec<Vec<u32>> = sites
        .iter()
        .map(|s| (0..s.len()).map(|i| s[..i].iter().filter(|t| **t == s[i]).count() as u32).collect())
        .collect();
    let find_row = |k: usize, site: &[u32], a: u32| -> usize {
        (0..sites[k].len()).find(|&i| sites[k][i] == site && mult[k][i] == a).expect("row exists")
    };
    let unit_of = |v: &Vector| -> Vec<(Config, FieldElement)> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (flat.basis[i].clone(), c.clone())).collect()
    };
    let matrix_units: Vec<Vec<Vec<Vec<(Config, FieldElement)>>>> = dec
        .blocks
        .iter()
        .map(|b| b.matrix_units.iter().map(|row| row.iter().map(unit_of).collect()).collect())
        .collect();

    // θ: g∘f ⇒ e sends (s; a, k; b, t) to E^k_{ji} where i, j are the rows for (s, a), (t, b).
    let gf = Path::generator(&f).push(&g, 0)?;
    let mut theta_entries = Vec::new();
    for c in gf.configs() {
        let s = &c[..nx];
        let (a, k) = (c[nx], c[nx + 1] as usize);
        let (bm, t) = (c[nx + 2], &c[nx + 3..]);
        let i = find_row(k, s, a);
        let j = find_row(k, t, bm);
        for (d, v) in &matrix_units[k][j][i] {
            theta_entries.push((c.clone(), d.clone(), v.clone()));
        }
    }
    let theta = TwoCell::from_entries(field, &gf, &m.e, theta_entries)?;
    let theta_inv = theta.inverse()?;

    // φ: f∘g ⇒ Id_B pairs matching rows.
    let fg = Path::generator(&g).push(&f, 0)?;
    let idb = Path::identity(&b);
    let mut phi_entries = Vec::new();
    for c in fg.configs() {
        if c[0] == c[c.len() - 1] {
            let k = c[0] as usize;
            let site = &c[2..2 + nx];
            let (j, i) = (find_row(k, site, c[1]), find_row(k, site, c[2 + nx]));
            if i == j {
                phi_entries.push((c.clone(), vec![c[0]], field.one()));
            }
        }
    }
    let phi = TwoCell::from_entries(field, &fg, &idb, phi_entries)?;

    let gamma = solve_gamma(field, m, &f, &g, &fg, &theta)?;
    let split = Splitting { b, e: m.e.clone(), f, g, phi, gamma, theta, theta_inv, matrix_units };
    verify_splitting(field, m, &split)?;
    Ok(split)
}

/// Solves `(θ∘θ)·(g γ f) = δ·θ` for γ.
fn solve_gamma(field: &Field, m: &CondensationMonad, f: &Gen, g: &Gen, fg: &Path, theta: &TwoCell) -> Result<TwoCell> {
    let unknowns: Vec<Config> = fg.configs().into_iter().filter(|c| c[0] == c[c.len() - 1]).collect();
    let idb = Path::identity(f.target());
    // Build the left side as a linear function of the unknowns: each unknown is a
    // candidate γ with a single entry.
    let gf = Path::generator(f).push(g, 0)?;
    let gfgf = gf.then(&gf)?;
    let theta2 = theta_squared(theta, &gfgf, &m.e)?;
    let rhs = theta.then(&m.delta)?;
    let gf_configs = gf.configs();
    let mut columns: Vec<BTreeMap<(Config, Config), FieldElement>> = Vec::new();
    for u in &unknowns {
        let single = TwoCell::from_entries(field, &idb, fg, vec![(vec![u[0]], u.clone(), field.one())])?;
        // g γ f inside g∘f: γ sits between f (layer 0) and g (layer 1)
        let lifted = single.apply_in(&gf, 1, 0)?;
        let lhs = lifted.then(&theta2)?;
        let mut col = BTreeMap::new();
        for (c, d, v) in lhs.entries() {
            col.insert((c.clone(), d.clone()), v.clone());
        }
        columns.push(col);
    }
    let mut rows: BTreeMap<(Config, Config), usize> = BTreeMap::new();
    for col in &columns {
        for k in col.keys() {
            let n = rows.len();
            rows.entry(k.clone()).or_insert(n);
        }
    }
    for c in &gf_configs {
        for (d, _) in rhs.row(c) {
            let n = rows.len();
            rows.entry((c.clone(), d.clone())).or_insert(n);
        }
    }
    let mut sys = LinearSystem::new(field, unknowns.len());
    let mut eqs: Vec<Vec<(usize, FieldElement)>> = vec![Vec::new(); rows.len()];
    for (j, col) in columns.iter().enumerate() {
        for (k, v) in col {
            eqs[rows[k]].push((j, v.clone()));
        }
    }
    for ((c, d), r) in &rows {
        sys.push(std::mem::take(&mut eqs[*r]), rhs.entry(c, d));
    }
    let sol = sys.solve_particular().ok_or_else(|| Error::Infeasible("no section γ is compatible with δ".into()))?;
    let entries = unknowns
        .iter()
        .zip(sol)
        .filter(|(_, v)| !v.is_zero())
        .map(|(u, v)| (vec![u[0]], u.clone(), v))
        .collect::<Vec<_>>();
    TwoCell::from_entries(field, &idb, fg, entries)
}

/// `θ∘θ: g∘f∘g∘f ⇒ e∘e`.
fn theta_squared(theta: &TwoCell, gfgf: &Path, e: &Path) -> Result<TwoCell> {
    let first = theta.apply_in(gfgf, 0, 0)?;
    first.then(&theta.apply_in(first.target(), e.len(), 0)?)
}

/// Checks the defining equations of a splitting.
pub fn verify_splitting(field: &Field, m: &CondensationMonad, s: &Splitting) -> Result<()> {
    let id = TwoCell::identity(field, &Path::identity(&s.b));
    if s.gamma.then(&s.phi)? != id {
        return Err(Error::Infeasible("φ·γ ≠ Id".into()));
    }
    let gf = s.gf();
    let gfgf = gf.then(&gf)?;
    let theta2 = theta_squared(&s.theta, &gfgf, &m.e)?;
    let lhs = theta2.then(&m.mu)?;
    let rhs = s.phi.apply_in(&gfgf, 1, 0)?.then(&s.theta)?;
    if let Some(d) = lhs.difference(&rhs) {
        return Err(Error::Infeasible(format!("multiplication splitting equation fails at {d}")));
    }
    let lhs2 = s.gamma.apply_in(&gf, 1, 0)?.then(&theta2)?;
    let rhs2 = s.theta.then(&m.delta)?;
    if let Some(d) = lhs2.difference(&rhs2) {
        return Err(Error::Infeasible(format!("comultiplication splitting equation fails at {d}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn matrix_algebra_monad(field: &Field) -> CondensationMonad {
        let x = TwoObject::single(Wire::new("X", 1));
        let e = Generator::new("e", x.clone(), x.clone(), vec![(vec![0], vec![0], 4)]).unwrap();
        let e = Path::generator(&e);
        let ee = e.then(&e).unwrap();
        let idx = |i: u32, j: u32| 2 * i + j;
        // path "y then x" has config [0, y, 0, x, 0] and stands for x·y
        let mut mu = Vec::new();
        let mut delta = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    mu.push((vec![0, idx(j, k), 0, idx(i, j), 0], vec![0, idx(i, k), 0], field.one()));
                    let half = field.from_i64(2).inv().unwrap();
                    delta.push((vec![0, idx(i, k), 0], vec![0, idx(j, k), 0, idx(i, j), 0], half));
                }
            }
        }
        CondensationMonad {
            carrier: x,
            mu: TwoCell::from_entries(field, &ee, &e, mu).unwrap(),
            delta: TwoCell::from_entries(field, &e, &ee, delta).unwrap(),
            e,
        }
    }

    fn diagonal_monad(field: &Field, rank: u32) -> CondensationMonad {
        let x = TwoObject::single(Wire::new("X", rank));
        let g = Generator::new("e", x.clone(), x.clone(), (0..rank).map(|s| (vec![s], vec![s], 1))).unwrap();
        let e = Path::generator(&g);
        let ee = e.then(&e).unwrap();
        let mu: Vec<_> = (0..rank).map(|s| (vec![s, 0, s, 0, s], vec![s, 0, s], field.one())).collect();
        let delta: Vec<_> = (0..rank).map(|s| (vec![s, 0, s], vec![s, 0, s, 0, s], field.one())).collect();
        CondensationMonad {
            carrier: x,
            mu: TwoCell::from_entries(field, &ee, &e, mu).unwrap(),
            delta: TwoCell::from_entries(field, &e, &ee, delta).unwrap(),
            e,
        }
    }

    #[test]
    fn matrix_monad_splits_through_rank_one() {
        let f = q();
        let m = matrix_algebra_monad(&f);
        let s = condensation_split(&f, &m, "B").unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.g.dims(), vec![vec![2]]);
        assert!(s.theta.is_invertible());
    }

    #[test]
    fn diagonal_monad_keeps_every_simple() {
        let f = q();
        let s = condensation_split(&f, &diagonal_monad(&f, 2), "B").unwrap();
        assert_eq!(s.rank(), 2);
        let d = s.g.dims();
        assert!(d.iter().all(|r| r.iter().sum::<u32>() == 1));
        assert!((0..2).all(|j| d.iter().map(|r| r[j]).sum::<u32>() == 1));
    }

    #[test]
    fn product_of_two_fields_splits_into_two() {
        let f = q();
        let x = TwoObject::single(Wire::new("X", 1));
        let g = Generator::new("e", x.clone(), x.clone(), vec![(vec![0], vec![0], 2)]).unwrap();
        let e = Path::generator(&g);
        let ee = e.then(&e).unwrap();
        let mu: Vec<_> = (0..2).map(|a| (vec![0, a, 0, a, 0], vec![0, a, 0], f.one())).collect();
        let delta: Vec<_> = (0..2).map(|a| (vec![0, a, 0], vec![0, a, 0, a, 0], f.one())).collect();
        let m = CondensationMonad {
            carrier: x,
            mu: TwoCell::from_entries(&f, &ee, &e, mu).unwrap(),
            delta: TwoCell::from_entries(&f, &e, &ee, delta).unwrap(),
            e,
        };
        let s = condensation_split(&f, &m, "B").unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.g.dims(), vec![vec![1, 1]]);
    }

    #[test]
    fn identity_monad_splits_to_a_copy() {
        let f = q();
        let x = TwoObject::single(Wire::new("X", 3));
        let e = Path::identity(&x);
        let id = TwoCell::identity(&f, &e);
        let m = CondensationMonad { carrier: x, e, mu: id.clone(), delta: id };
        let s = condensation_split(&f, &m, "B").unwrap();
        assert_eq!(s.rank(), 3);
        let mut cols: Vec<u32> = (0..3).map(|j| s.g.dims().iter().map(|r| r[j]).sum()).collect();
        cols.sort();
        assert_eq!(cols, vec![1, 1, 1]);
    }

    #[test]
    fn splitting_twice_agrees_on_shape() {
        let f = q();
        let m = matrix_algebra_monad(&f);
        let a = condensation_split(&f, &m, "B").unwrap();
        let b = condensation_split(&f, &m, "B'").unwrap();
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.g.dims(), b.g.dims());
    }

    #[test]
    fn non_unital_monad_is_rejected() {
        let f = q();
        let mut m = diagonal_monad(&f, 1);
        m.mu = TwoCell::zero(&f, &m.ee(), &m.e).unwrap();
        assert!(matches!(condensation_split(&f, &m, "B"), Err(Error::NotSemisimple(_))));
    }
}
