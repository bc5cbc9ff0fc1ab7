//! Skeletal model of the ambient monoidal 2-category: 2Vect and 2Vect_G.
//!
//! Objects are lists of wires (Deligne products), 1-morphisms are composites of
//! generators acting on windows of wires, and 2-morphisms are sparse matrices
//! between the basis paths of two parallel composites.  Composition and the
//! monoidal product are strictly associative and the interchangers are
//! identities, so every coherence cell of the strict cubical model is trivial.

mod cell;
mod descent;
mod diagram;
mod generator;
mod group;
mod monad;
mod object;
mod path;
mod solve;

use std::sync::Arc;

pub use cell::{CellDifference, TwoCell};
pub use descent::{descend, split_idempotent, Condensation, Descended, Image};
pub use diagram::Rewrite;
pub use generator::{Gen, Generator};
pub use group::FiniteGroup;
pub use monad::{condensation_split, flatten_monad, verify_splitting, CondensationMonad, FlatMonad, Splitting};
pub use object::{Labels, TwoObject, Wire};
pub use path::{Config, Layer, Path};
pub use solve::{CellProblem, CellSolution};

use crate::error::{Error, Result};
use crate::scalars::{Field, FieldSpec};

/// 1-morphisms are composites of generators.
pub type OneMorphism = Path;
/// 2-morphisms between composites.
pub type TwoMorphism = TwoCell;

/// Which ambient 2-category a computation lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientKind {
    TwoVect,
    TwoVectG(Arc<FiniteGroup>),
}

/// The ambient 2-category together with its ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub kind: AmbientKind,
    pub field: Field,
}

impl Ambient {
    pub fn two_vect(field: &Field) -> Ambient {
        Ambient { kind: AmbientKind::TwoVect, field: field.clone() }
    }

    pub fn two_vect_g(field: &Field, group: FiniteGroup) -> Ambient {
        Ambient { kind: AmbientKind::TwoVectG(Arc::new(group)), field: field.clone() }
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.kind {
            AmbientKind::TwoVect => None,
            AmbientKind::TwoVectG(g) => Some(g),
        }
    }

    /// `2vect` or `2vectg:<group>`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Ambient> {
        let f = Field::new(field);
        let t = text.trim();
        if t.eq_ignore_ascii_case("2vect") {
            return Ok(Ambient::two_vect(&f));
        }
        if let Some(g) = t.strip_prefix("2vectg:").or_else(|| t.strip_prefix("2VectG:")) {
            return Ok(Ambient::two_vect_g(&f, FiniteGroup::by_name(g)?));
        }
        Err(Error::InvalidInput(format!("unknown ambient `{text}` (expected 2vect or 2vectg:<group>)")))
    }

    pub fn name(&self) -> String {
        match &self.kind {
            AmbientKind::TwoVect => "2vect".into(),
            AmbientKind::TwoVectG(g) => format!("2vectg:{}", g.name()),
        }
    }

    /// A wire with `rank` simples; in 2Vect_G the degrees must be given.
    pub fn wire(&self, name: &str, rank: u32, grades: Option<Vec<u32>>) -> Result<Wire> {
        match (&self.kind, grades) {
            (AmbientKind::TwoVect, None) => Ok(Wire::new(name, rank)),
            (AmbientKind::TwoVect, Some(_)) => {
                Err(Error::Grading(format!("object `{name}` is graded but the ambient is 2Vect")))
            }
            (AmbientKind::TwoVectG(g), Some(gr)) => {
                if gr.len() != rank as usize {
                    return Err(Error::Grading(format!("object `{name}` lists {} degrees for rank {rank}", gr.len())));
                }
                Wire::graded(name, g, gr)
            }
            (AmbientKind::TwoVectG(_), None) => {
                Err(Error::Grading(format!("object `{name}` needs degrees in a graded ambient")))
            }
        }
    }

    /// The monoidal unit: the empty Deligne product.
    pub fn unit(&self) -> TwoObject {
        TwoObject::unit()
    }
}

/// `g ∘ f`.
pub fn compose1(g: &Path, f: &Path) -> Result<Path> {
    f.then(g)
}

/// Vertical composite `beta · alpha` (alpha first).
pub fn vcompose2(beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    alpha.then(beta)
}

/// Horizontal composite of `beta: S ⇒ T` after `alpha: P ⇒ Q`.
pub fn hcompose2(beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    alpha.hcompose(beta)
}

/// A generator together with its adjoint and the canonical unit and counit.
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub f: Gen,
    pub f_star: Gen,
    /// `Id ⇒ f* ∘ f`
    pub eta: TwoCell,
    /// `f ∘ f* ⇒ Id`
    pub epsilon: TwoCell,
}

/// Adjoint of a generator with canonical coevaluation and evaluation, pairing each
/// multiplicity basis vector with its dual.
pub fn adjoint1(field: &Field, f: &Gen) -> Adjunction {
    let fs = f.adjoint();
    let (eta, epsilon) = unit_counit(field, f, &fs);
    Adjunction { f: f.clone(), f_star: fs, eta, epsilon }
}

/// Canonical `Id ⇒ g ∘ f` and `f ∘ g ⇒ Id` for a generator `f` and its transpose `g`.
pub fn unit_counit(field: &Field, f: &Gen, g: &Gen) -> (TwoCell, TwoCell) {
    let src = Path::identity(f.source());
    let fg = Path::generator(f).push(g, 0).expect("adjoint fits");
    let mut eta_entries = Vec::new();
    for s in f.source().simples() {
        for (t, m) in f.outputs(&s) {
            for a in 0..*m {
                let mut d = s.clone();
                d.push(a);
                d.extend_from_slice(t);
                d.push(a);
                d.extend_from_slice(&s);
                eta_entries.push((s.clone(), d, field.one()));
            }
        }
    }
    let eta = TwoCell::from_entries(field, &src, &fg, eta_entries).expect("canonical unit");
    let tgt = Path::identity(f.target());
    let gf = Path::generator(g).push(f, 0).expect("adjoint fits");
    let mut eps_entries = Vec::new();
    for t in f.target().simples() {
        for (s, m) in g.outputs(&t) {
            for a in 0..*m {
                let mut c = t.clone();
                c.push(a);
                c.extend_from_slice(s);
                c.push(a);
                c.extend_from_slice(&t);
                eps_entries.push((c, t.clone(), field.one()));
            }
        }
    }
    let epsilon = TwoCell::from_entries(field, &gf, &tgt, eps_entries).expect("canonical counit");
    (eta, epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn composition_multiplies_dims() {
        let x = TwoObject::single(Wire::new("X", 1));
        let y = TwoObject::single(Wire::new("Y", 2));
        let f = Generator::from_dims("f", x.clone(), y.clone(), &[vec![2], vec![3]]).unwrap();
        let g = Generator::from_dims("g", y.clone(), y.clone(), &[vec![1, 1], vec![0, 1]]).unwrap();
        let gf = compose1(&Path::generator(&g), &Path::generator(&f)).unwrap();
        assert_eq!(gf.dims(), vec![vec![5], vec![3]]);
        let id = Path::identity(&y);
        assert_eq!(compose1(&id, &Path::generator(&f)).unwrap(), Path::generator(&f));
    }

    #[test]
    fn graded_composition_convolves_degrees() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let dg = TwoObject::single(Wire::graded("g", &z2, vec![1]).unwrap());
        let dh = TwoObject::single(Wire::graded("h", &z2, vec![1]).unwrap());
        let boxed = dg.boxed(&dh);
        assert_eq!(boxed.graded_rank(), Some(vec![1, 0]));
        let e = TwoObject::single(Wire::graded("e", &z2, vec![0]).unwrap());
        assert!(Generator::from_dims("bad", dg.clone(), e.clone(), &[vec![1]]).is_err());
        assert!(Generator::from_dims("ok", boxed, e, &[vec![1]]).is_ok());
    }

    #[test]
    fn box_of_ranks() {
        let a = TwoObject::single(Wire::new("A", 2));
        let b = TwoObject::single(Wire::new("B", 3));
        assert_eq!(a.boxed(&b).rank(), 6);
        assert_eq!(TwoObject::unit().rank(), 1);
    }

    #[test]
    fn snake_equations() {
        let k = q();
        let x = TwoObject::single(Wire::new("X", 1));
        let y = TwoObject::single(Wire::new("Y", 2));
        let f = Generator::from_dims("f", x.clone(), y.clone(), &[vec![2], vec![3]]).unwrap();
        let adj = adjoint1(&k, &f);
        assert_eq!(Path::generator(&adj.f_star).dims(), vec![vec![2, 3]]);
        // (ε f) · (f η) = id_f
        let pf = Path::generator(&f);
        let host = adj.eta.target().then(&pf).unwrap();
        let s1 = adj.eta.before_path(&pf).unwrap();
        assert_eq!(s1.target(), &host);
        let s2 = adj.epsilon.apply_in(&host, 1, 0).unwrap();
        assert!(s1.then(&s2).unwrap().is_identity());
        // (f* ε) · (η f*) = id_{f*}
        let pfs = Path::generator(&adj.f_star);
        let t1 = adj.eta.after_path(&pfs).unwrap();
        let t2 = adj.epsilon.apply_in(t1.target(), 0, 0).unwrap();
        assert!(t1.then(&t2).unwrap().is_identity());
        let twice = adj.f_star.adjoint();
        assert_eq!(Path::generator(&twice).dims(), Path::generator(&f).dims());
    }

    #[test]
    fn interchange_of_whiskerings() {
        let k = q();
        let a = TwoObject::single(Wire::new("A", 2));
        let b = TwoObject::single(Wire::new("B", 2));
        let f = Generator::from_dims("f", a.clone(), a.clone(), &[vec![1, 1], vec![0, 2]]).unwrap();
        let g = Generator::from_dims("g", b.clone(), b.clone(), &[vec![2, 0], vec![1, 1]]).unwrap();
        // ξ: f ⇒ f an arbitrary invertible cell, ξ': g ⇒ g
        let pf = Path::generator(&f);
        let pg = Path::generator(&g);
        let scale = |p: &Path, s: i64| {
            let entries: Vec<_> = p.configs().into_iter().map(|c| (c.clone(), c, k.from_i64(s))).collect();
            TwoCell::from_entries(&k, p, p, entries).unwrap()
        };
        let xi = scale(&pf, 3);
        let xi2 = scale(&pg, 5);
        let one = TwoObject::unit();
        let left = xi.whiskered(&one, &b);
        let right = xi2.whiskered(&a, &one);
        let host = left.source().then(right.source()).unwrap();
        let order1 = left.apply_in(&host, 0, 0).unwrap();
        let order1 = order1.then(&right.apply_in(order1.target(), 1, 0).unwrap()).unwrap();
        // swap, apply in the other order, swap back
        let sw = TwoCell::interchange(&k, &host, 0).unwrap();
        let h2 = sw.target().clone();
        let r2 = right.apply_in(&h2, 0, 0).unwrap();
        let l2 = left.apply_in(r2.target(), 1, 0).unwrap();
        let back = TwoCell::interchange(&k, l2.target(), 0).unwrap();
        let order2 = sw.then(&r2).unwrap().then(&l2).unwrap().then(&back).unwrap();
        assert_eq!(order1, order2);
        assert_eq!(xi.boxed(&xi2).unwrap(), order1);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let k = q();
        let a = TwoObject::single(Wire::new("A", 1));
        let f = Generator::from_dims("f", a.clone(), a.clone(), &[vec![2]]).unwrap();
        let p = Path::generator(&f);
        let cs = p.configs();
        let two = k.from_i64(2);
        let entries = vec![
            (cs[0].clone(), cs[0].clone(), k.one()),
            (cs[0].clone(), cs[1].clone(), two.clone()),
            (cs[1].clone(), cs[1].clone(), k.one()),
        ];
        let xi = TwoCell::from_entries(&k, &p, &p, entries).unwrap();
        assert!(xi.then(&xi.inverse().unwrap()).unwrap().is_identity());
        assert!(xi.inverse().unwrap().then(&xi).unwrap().is_identity());
    }

    #[test]
    fn horizontal_composite_of_scalars() {
        let k = q();
        let a = TwoObject::single(Wire::new("A", 1));
        let f = Generator::from_dims("f", a.clone(), a.clone(), &[vec![1]]).unwrap();
        let g = Generator::from_dims("g", a.clone(), a.clone(), &[vec![1]]).unwrap();
        let s = |gen: &Gen, v: i64| {
            let p = Path::generator(gen);
            let c = p.configs()[0].clone();
            TwoCell::from_entries(&k, &p, &p, vec![(c.clone(), c, k.from_i64(v))]).unwrap()
        };
        let h = hcompose2(&s(&g, 3), &s(&f, 7)).unwrap();
        assert_eq!(h.entries().next().unwrap().2, &k.from_i64(21));
    }
}
