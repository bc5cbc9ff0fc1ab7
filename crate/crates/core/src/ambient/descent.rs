//! Moving 1- and 2-morphisms across a split condensation monad.
//!
//! Given a splitting `f: X → B`, `g: B → X` of a monad `e` on `X`, a 1-morphism
//! `h: X → Y` carrying a unital associative right `e`-action descends to
//! `h̃: B → Y` with `h̃ ∘ f ≅ h`.  It is computed as the image of an
//! idempotent on `h ∘ g`.

use std::collections::BTreeMap;

use super::cell::TwoCell;
use super::diagram::Rewrite;
use super::generator::{Gen, Generator};
use super::monad::Splitting;
use super::object::{Labels, TwoObject};
use super::path::{Config, Path};
use crate::error::{Error, Result};
use crate::scalars::{express, independent_subset, Field, Vector};

/// A splitting with `f` and `g` given as composites, so that it can be
/// whiskered by objects.
#[derive(Clone, Debug)]
pub struct Condensation {
    pub e: Path,
    /// `X → B`
    pub f: Path,
    /// `B → X`
    pub g: Path,
    /// `f ∘ g ⇒ Id_B`
    pub phi: TwoCell,
    /// `Id_B ⇒ f ∘ g`
    pub gamma: TwoCell,
    /// `g ∘ f ⇒ e`
    pub theta: TwoCell,
    pub theta_inv: TwoCell,
}

impl Splitting {
    pub fn condensation(&self) -> Condensation {
        Condensation {
            e: self.e.clone(),
            f: Path::generator(&self.f),
            g: Path::generator(&self.g),
            phi: self.phi.clone(),
            gamma: self.gamma.clone(),
            theta: self.theta.clone(),
            theta_inv: self.theta_inv.clone(),
        }
    }
}

impl Condensation {
    /// The upstairs object `X`.
    pub fn upstairs(&self) -> &TwoObject {
        self.f.source()
    }

    /// The downstairs object `B`.
    pub fn downstairs(&self) -> &TwoObject {
        self.f.target()
    }

    /// `L □ (−) □ R` applied to every piece.
    pub fn whiskered(&self, left: &TwoObject, right: &TwoObject) -> Condensation {
        Condensation {
            e: self.e.whiskered(left, right),
            f: self.f.whiskered(left, right),
            g: self.g.whiskered(left, right),
            phi: self.phi.whiskered(left, right),
            gamma: self.gamma.whiskered(left, right),
            theta: self.theta.whiskered(left, right),
            theta_inv: self.theta_inv.whiskered(left, right),
        }
    }

    /// `f ∘ e ⇒ f`, through `f g f`.
    pub fn absorb(&self, field: &Field) -> Result<TwoCell> {
        let start = self.e.then(&self.f)?;
        Ok(Rewrite::new(field, &start).apply(&self.theta_inv, 0, 0)?.apply(&self.phi, self.f.len(), 0)?.finish())
    }

    /// `e ∘ g ⇒ g`, through `g f g`.
    pub fn absorb_left(&self, field: &Field) -> Result<TwoCell> {
        let start = self.g.then(&self.e)?;
        Ok(Rewrite::new(field, &start).apply(&self.theta_inv, self.g.len(), 0)?.apply(&self.phi, 0, 0)?.finish())
    }

    /// The 2-morphism `P ⇒ Q` between composites out of `B` whose whiskering
    /// by `f` is the equivariant `u: P ∘ f ⇒ Q ∘ f`.
    pub fn descend_cell(&self, field: &Field, u: &TwoCell, p: &Path, q: &Path) -> Result<TwoCell> {
        let fp = self.f.then(p)?;
        let fq = self.f.then(q)?;
        if u.source() != &fp || u.target() != &fq {
            return Err(Error::DimensionMismatch("the cell to descend must run between whiskerings by f".into()));
        }
        let cell = Rewrite::new(field, p)
            .apply(&self.gamma, 0, 0)?
            .apply(u, self.g.len(), 0)?
            .apply(&self.phi, 0, 0)?
            .finish();
        if cell.target() != q {
            return Err(Error::DimensionMismatch(format!("descended cell lands in {:?}", cell.target())));
        }
        Ok(cell)
    }
}

/// The image `h` of an idempotent `π: P ⇒ P`, with `ι·p = Id_h` and `p·ι = π`.
#[derive(Clone, Debug)]
pub struct Image {
    pub h: Gen,
    /// `h ⇒ P`
    pub iota: TwoCell,
    /// `P ⇒ h`
    pub proj: TwoCell,
}

/// Splits an idempotent 2-morphism block by block: the rows of `ι` are a basis
/// of the row space of `π`, the rows of `p` are coordinates in that basis.
pub fn split_idempotent(field: &Field, path: &Path, pi: &TwoCell, name: &str) -> Result<Image> {
    if pi.source() != path || pi.target() != path {
        return Err(Error::DimensionMismatch(format!("`{name}`: π must be an endomorphism of {path:?}")));
    }
    if pi.then(pi)? != *pi {
        return Err(Error::InvalidInput(format!("`{name}`: π is not idempotent")));
    }
    let ns = path.source().len();
    let mut blocks: BTreeMap<(Labels, Labels), Vec<Config>> = BTreeMap::new();
    for c in path.configs() {
        blocks.entry((c[..ns].to_vec(), path.target_labels(&c))).or_default().push(c);
    }
    let mut mult: Vec<(Labels, Labels, u32)> = Vec::new();
    let mut chosen: Vec<((Labels, Labels), Vec<Config>, Vec<Vector>)> = Vec::new();
    for (key, cfgs) in blocks {
        let col: BTreeMap<&Config, usize> = cfgs.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let rows: Vec<Vector> = cfgs
            .iter()
            .map(|c| {
                let mut v = vec![field.zero(); cfgs.len()];
                for (d, x) in pi.row(c) {
                    v[col[d]] = x.clone();
                }
                v
            })
            .collect();
        let basis = independent_subset(field, &rows);
        if !basis.is_empty() {
            mult.push((key.0.clone(), key.1.clone(), basis.len() as u32));
        }
        chosen.push((key, cfgs, basis));
    }
    let h = Generator::new(name, path.source().clone(), path.target().clone(), mult)?;
    let hp = Path::generator(&h);
    let mut iota = Vec::new();
    let mut proj = Vec::new();
    for ((s, t), cfgs, basis) in chosen {
        let hc = |a: usize| {
            let mut c = s.clone();
            c.push(a as u32);
            c.extend_from_slice(&t);
            c
        };
        for (a, b) in basis.iter().enumerate() {
            for (k, x) in b.iter().enumerate() {
                if !x.is_zero() {
                    iota.push((hc(a), cfgs[k].clone(), x.clone()));
                }
            }
        }
        let col: BTreeMap<&Config, usize> = cfgs.iter().enumerate().map(|(i, c)| (c, i)).collect();
        for c in &cfgs {
            let mut v = vec![field.zero(); cfgs.len()];
            for (d, x) in pi.row(c) {
                v[col[d]] = x.clone();
            }
            let coords =
                express(field, &basis, &v).ok_or_else(|| Error::InvalidInput("row outside the image".into()))?;
            for (a, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    proj.push((c.clone(), hc(a), x));
                }
            }
        }
    }
    let iota = TwoCell::from_entries(field, &hp, path, iota)?;
    let proj = TwoCell::from_entries(field, path, &hp, proj)?;
    debug_assert!(iota.then(&proj).map(|c| c.is_identity()).unwrap_or(false));
    Ok(Image { h, iota, proj })
}

/// A descended 1-morphism `h̃: B → Y` with `ξ: h̃ ∘ f ≅ h`.
#[derive(Clone, Debug)]
pub struct Descended {
    pub h: Gen,
    /// `h̃ ∘ f ⇒ h`
    pub xi: TwoCell,
    pub xi_inv: TwoCell,
    /// `h̃ ⇒ h ∘ g`
    pub iota: TwoCell,
    /// `h ∘ g ⇒ h̃`
    pub proj: TwoCell,
}

/// Descends `h: X → Y` along `c`, given a right action `a: h ∘ e ⇒ h`.
pub fn descend(field: &Field, c: &Condensation, h: &Path, action: &TwoCell, name: &str) -> Result<Descended> {
    let eh = c.e.then(h)?;
    if action.source() != &eh || action.target() != h {
        return Err(Error::DimensionMismatch(format!("`{name}`: the action must be h∘e ⇒ h")));
    }
    let gh = c.g.then(h)?;
    let pi = Rewrite::new(field, &gh)
        .apply(&c.gamma, 0, 0)?
        .apply(&c.theta, c.g.len(), 0)?
        .apply(action, c.g.len(), 0)?
        .finish();
    let image = split_idempotent(field, &gh, &pi, name)?;
    let fh = c.f.then(&Path::generator(&image.h))?;
    let xi =
        Rewrite::new(field, &fh).apply(&image.iota, c.f.len(), 0)?.apply(&c.theta, 0, 0)?.apply(action, 0, 0)?.finish();
    let xi_inv = xi
        .inverse()
        .map_err(|_| Error::NotInvertible(format!("`{name}`: the comparison h̃∘f ⇒ h is not invertible")))?;
    Ok(Descended { h: image.h, xi, xi_inv, iota: image.iota, proj: image.proj })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::{condensation_split, CondensationMonad, Wire};

    fn q() -> Field {
        Field::rationals()
    }

    fn matrix_monad(field: &Field) -> CondensationMonad {
        let x = TwoObject::single(Wire::new("X", 1));
        let e = Generator::new("e", x.clone(), x.clone(), vec![(vec![0], vec![0], 4)]).unwrap();
        let e = Path::generator(&e);
        let ee = e.then(&e).unwrap();
        let idx = |i: u32, j: u32| 2 * i + j;
        let half = field.from_i64(2).inv().unwrap();
        let mut mu = Vec::new();
        let mut delta = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    mu.push((vec![0, idx(j, k), 0, idx(i, j), 0], vec![0, idx(i, k), 0], field.one()));
                    delta.push((vec![0, idx(i, k), 0], vec![0, idx(j, k), 0, idx(i, j), 0], half.clone()));
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

    #[test]
    fn idempotent_image_has_the_rank_of_the_idempotent() {
        let k = q();
        let x = TwoObject::single(Wire::new("X", 1));
        let p = Path::generator(&Generator::new("p", x.clone(), x.clone(), vec![(vec![0], vec![0], 3)]).unwrap());
        let cs = p.configs();
        // projection onto the first two coordinates along (1, 1, -1)
        let entries = vec![
            (cs[0].clone(), cs[0].clone(), k.one()),
            (cs[1].clone(), cs[1].clone(), k.one()),
            (cs[2].clone(), cs[0].clone(), k.one()),
            (cs[2].clone(), cs[1].clone(), k.one()),
        ];
        let pi = TwoCell::from_entries(&k, &p, &p, entries).unwrap();
        let img = split_idempotent(&k, &p, &pi, "h").unwrap();
        assert_eq!(Path::generator(&img.h).dims(), vec![vec![2]]);
        assert!(img.iota.then(&img.proj).unwrap().is_identity());
        assert_eq!(img.proj.then(&img.iota).unwrap(), pi);
    }

    #[test]
    fn non_idempotent_is_rejected() {
        let k = q();
        let x = TwoObject::single(Wire::new("X", 1));
        let p = Path::generator(&Generator::new("p", x.clone(), x, vec![(vec![0], vec![0], 1)]).unwrap());
        let c = p.configs()[0].clone();
        let two = TwoCell::from_entries(&k, &p, &p, vec![(c.clone(), c, k.from_i64(2))]).unwrap();
        assert!(split_idempotent(&k, &p, &two, "h").is_err());
    }

    #[test]
    fn f_descends_to_the_identity() {
        let k = q();
        let m = matrix_monad(&k);
        let s = condensation_split(&k, &m, "B").unwrap();
        let c = s.condensation();
        let action = c.absorb(&k).unwrap();
        let d = descend(&k, &c, &c.f, &action, "h").unwrap();
        assert_eq!(Path::generator(&d.h).dims(), vec![vec![1]]);
        assert!(d.xi.then(&d.xi_inv).unwrap().is_identity());
    }

    #[test]
    fn descended_identity_cell_is_an_identity() {
        let k = q();
        let m = matrix_monad(&k);
        let s = condensation_split(&k, &m, "B").unwrap();
        let c = s.condensation();
        let b = Path::identity(c.downstairs());
        let u = TwoCell::identity(&k, &c.f);
        let d = c.descend_cell(&k, &u, &b, &b).unwrap();
        assert!(d.is_identity());
    }

    #[test]
    fn whiskered_condensation_keeps_its_equations() {
        let k = q();
        let m = matrix_monad(&k);
        let s = condensation_split(&k, &m, "B").unwrap();
        let y = TwoObject::single(Wire::new("Y", 2));
        let c = s.condensation().whiskered(&TwoObject::unit(), &y);
        let fg = c.g.then(&c.f).unwrap();
        assert_eq!(c.gamma.target(), &fg);
        assert!(c.gamma.then(&c.phi).unwrap().is_identity());
        assert!(c.theta.then(&c.theta_inv).unwrap().is_identity());
    }

    #[test]
    fn reorder_recovers_a_permuted_composite() {
        let k = q();
        let x = TwoObject::single(Wire::new("X", 1));
        let a = Generator::new("a", x.clone(), x.clone(), vec![(vec![0], vec![0], 2)]).unwrap();
        let b = Generator::new("b", x.clone(), x.clone(), vec![(vec![0], vec![0], 3)]).unwrap();
        let xx = x.boxed(&x);
        let p = Path::from_layers(&xx, &[(a.clone(), 0), (b.clone(), 1)]).unwrap();
        let target = Path::from_layers(&xx, &[(b, 1), (a, 0)]).unwrap();
        let cell = Rewrite::new(&k, &p).reorder_to(&target).unwrap().finish();
        assert_eq!(cell.target(), &target);
        assert!(cell.is_invertible());
    }
}
