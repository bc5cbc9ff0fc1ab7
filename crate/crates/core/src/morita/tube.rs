//! The tube algebra `⊕_{a,b,x} Hom(x⊗a, b⊗x)` of a fusion algebra.  Its
//! simple blocks are the simple objects of the center of the unit in
//! `Bimod(A)`.

use crate::ambient::{Config, Gen, Generator, Path, Rewrite, TwoCell, TwoObject};
use crate::error::Result;
use crate::scalars::{decompose_semisimple_algebra, AssocAlgebra, FieldElement, Vector};
use crate::structures::AlgebraObject;

/// One basis vector: a basis path of `x⊗a` and one of `b⊗x` ending at the same simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeBasis {
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub src: Config,
    pub tgt: Config,
}

#[derive(Clone, Debug)]
pub struct TubeAlgebra {
    pub algebra: AssocAlgebra,
    pub basis: Vec<TubeBasis>,
    /// `Σ_a id_{a⊗a}` in the `x = a` sectors
    pub twist: Vector,
}

struct Builder<'a> {
    alg: &'a AlgebraObject,
    simples: Vec<Gen>,
    q: usize,
}

impl Builder<'_> {
    /// `x⊗a` as a composite out of the unit.
    fn left(&self, x: usize, a: usize) -> Result<Path> {
        let unit = TwoObject::unit();
        Path::from_layers(
            &unit,
            &[(self.simples[x].clone(), 0), (self.simples[a].clone(), self.q), (self.alg.m.clone(), 0)],
        )
    }

    fn cell(&self, e: &TubeBasis) -> Result<TwoCell> {
        let f = &self.alg.field;
        TwoCell::from_entries(
            f,
            &self.left(e.x, e.a)?,
            &self.left(e.b, e.x)?,
            [(e.src.clone(), e.tgt.clone(), f.one())],
        )
    }

    fn path(&self, gens: &[(usize, usize)], ms: &[usize]) -> Result<Path> {
        let mut layers: Vec<(Gen, usize)> = gens.iter().map(|&(s, o)| (self.simples[s].clone(), o * self.q)).collect();
        layers.extend(ms.iter().map(|&o| (self.alg.m.clone(), o * self.q)));
        Path::from_layers(&TwoObject::unit(), &layers)
    }

    /// `Y ∘ X` as a 2-cell from `(y⊗x)⊗a` to `c⊗(y⊗x)`.
    fn compose(&self, y: &TubeBasis, x: &TubeBasis) -> Result<TwoCell> {
        let (cx, cy) = (self.cell(x)?, self.cell(y)?);
        let (mu, mu_inv) = (&self.alg.mu, self.alg.mu.inverse()?);
        let q = self.q;
        let start = self.path(&[(y.x, 0), (x.x, 1)], &[0])?;
        let start = start
            .then(&Path::from_layers(start.target(), &[(self.simples[x.a].clone(), q), (self.alg.m.clone(), 0)])?)?;
        Ok(Rewrite::new(&self.alg.field, &start)
            .reorder_to(&self.path(&[(y.x, 0), (x.x, 1), (x.a, 2)], &[0, 0])?)?
            .at(mu, 3)?
            .apply(&cx, 1, q)?
            .at(&mu_inv, 3)?
            .reorder_to(&self.reordered(y.x, x.b, x.x)?)?
            .apply(&cy, 0, 0)?
            .reorder_to(&self.path(&[(y.b, 0), (y.x, 1), (x.x, 2)], &[0, 0])?)?
            .at(mu, 3)?
            .finish())
    }

    /// `[s_y@0, s_b@q, m@0, s_x@q, m@0]`
    fn reordered(&self, y: usize, b: usize, x: usize) -> Result<Path> {
        let q = self.q;
        let s = &self.simples;
        Path::from_layers(
            &TwoObject::unit(),
            &[
                (s[y].clone(), 0),
                (s[b].clone(), q),
                (self.alg.m.clone(), 0),
                (s[x].clone(), q),
                (self.alg.m.clone(), 0),
            ],
        )
    }
}

/// Splits a config of `[s_y, s_x, m, s_a, m]` (or the target composite) into its pieces.
fn fields(c: &[u32], q: usize) -> Vec<&[u32]> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < c.len() {
        out.push(&c[i + 1..i + 1 + q]);
        out.push(&c[i..i + 1]);
        i += 1 + q;
    }
    out
}

impl TubeAlgebra {
    pub fn new(alg: &AlgebraObject) -> Result<TubeAlgebra> {
        let field = &alg.field;
        let unit = TwoObject::unit();
        let labels = alg.a.simples();
        let simples = labels
            .iter()
            .enumerate()
            .map(|(k, l)| Generator::new(&format!("s{k}"), unit.clone(), alg.a.clone(), [(vec![], l.clone(), 1)]))
            .collect::<Result<Vec<_>>>()?;
        let b = Builder { alg, simples, q: alg.len() };
        let n = labels.len();

        let mut basis = Vec::new();
        for a in 0..n {
            for bb in 0..n {
                for x in 0..n {
                    let (p, t) = (b.left(x, a)?, b.left(bb, x)?);
                    for c in p.configs() {
                        for d in t.configs() {
                            if p.target_labels(&c) == t.target_labels(&d) {
                                basis.push(TubeBasis { x, a, b: bb, src: c.clone(), tgt: d });
                            }
                        }
                    }
                }
            }
        }
        let index = |e: &TubeBasis| basis.iter().position(|f| f == e);
        let dim = basis.len();
        let q = alg.len();
        let mut products = vec![Vec::new(); dim * dim];
        for (i, y) in basis.iter().enumerate() {
            for (j, x) in basis.iter().enumerate() {
                if y.a != x.b {
                    continue;
                }
                let w = b.compose(y, x)?;
                for (src, tgt, v) in w.entries() {
                    // src: y, x, (k, z), a, (μ, d); tgt: c, y, x, (k', z'), (μ', d)
                    let s = fields(src, q);
                    let t = fields(tgt, q);
                    let (k, z) = (s[5], s[4]);
                    if (t[7], t[6]) != (k, z) {
                        continue;
                    }
                    let zi = labels.iter().position(|l| l == z).expect("a simple");
                    let ci = labels.iter().position(|l| l == t[0]).expect("a simple");
                    let src_z = [&[0], z, &[0], s[6], s[9], s[8]].concat();
                    let tgt_z = [&[0], t[0], &[0], z, t[9], t[8]].concat();
                    let e = TubeBasis { x: zi, a: x.a, b: ci, src: src_z, tgt: tgt_z };
                    let pos = index(&e).expect("products land in the basis");
                    products[i * dim + j].push((pos, v.clone()));
                }
            }
        }
        let algebra = AssocAlgebra::from_products(field, dim, products)?;
        let mut twist = vec![field.zero(); dim];
        for (i, e) in basis.iter().enumerate() {
            if e.x == e.a && e.a == e.b && e.src == e.tgt {
                twist[i] = field.one();
            }
        }
        Ok(TubeAlgebra { algebra, basis, twist })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether the twist element commutes with every basis vector.
    pub fn twist_is_central(&self) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.algebra.basis_vector(i);
            self.algebra.mul(&self.twist, &e) == self.algebra.mul(&e, &self.twist)
        })
    }
}

/// One simple object of the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterBlock {
    /// size of the matrix block
    pub size: usize,
    /// scalar by which the twist acts, when the twist is central
    pub twist: Option<FieldElement>,
}

#[derive(Clone, Debug)]
pub struct CenterData {
    pub rank: usize,
    pub tube_dim: usize,
    pub blocks: Vec<CenterBlock>,
}

/// Rank of the center of the unit bimodule, from the Wedderburn decomposition
/// of the tube algebra.  Fails with `NotSemisimple` when the tube algebra has
/// a radical over the working field.
pub fn center_rank(alg: &AlgebraObject) -> Result<CenterData> {
    let tube = TubeAlgebra::new(alg)?;
    let wd = decompose_semisimple_algebra(&tube.algebra)?;
    let central = tube.twist_is_central();
    let blocks = wd
        .blocks
        .iter()
        .map(|blk| {
            let twist = central.then(|| eigenvalue(&tube, &blk.idempotent)).flatten();
            CenterBlock { size: blk.block_dim, twist }
        })
        .collect();
    Ok(CenterData { rank: wd.num_blocks(), tube_dim: tube.dim(), blocks })
}

fn eigenvalue(tube: &TubeAlgebra, idem: &[FieldElement]) -> Option<FieldElement> {
    let image = tube.algebra.mul(&tube.twist, idem);
    let j = idem.iter().position(|v| !v.is_zero())?;
    let theta = &image[j] * &idem[j].inv().ok()?;
    let scaled: Vec<FieldElement> = idem.iter().map(|v| &theta * v).collect();
    (scaled == image).then_some(theta)
}
