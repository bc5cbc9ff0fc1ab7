//! Finite-dimensional associative algebras and their Wedderburn decomposition.

use std::fmt;

use super::field::{Field, FieldElement};
use super::matrix::{LinearSystem, ScalarMatrix};
use super::poly::{format_poly, roots_in_field};
use crate::error::{Error, Result};

pub type Vector = Vec<FieldElement>;

/// An associative algebra given by structure constants `e_i e_j = Σ_k c_ijk e_k`.
#[derive(Clone)]
pub struct AssocAlgebra {
    field: Field,
    dim: usize,
    /// Sparse products, indexed by `i * dim + j`.
    table: Vec<Vec<(usize, FieldElement)>>,
    unit: Option<Vector>,
}

impl fmt::Debug for AssocAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocAlgebra(dim {} over {})", self.dim, self.field)
    }
}

impl AssocAlgebra {
    /// Builds an algebra from sparse products; `products[i*dim+j]` lists `(k, c_ijk)`.
    pub fn from_products(field: &Field, dim: usize, products: Vec<Vec<(usize, FieldElement)>>) -> Result<AssocAlgebra> {
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!("expected {} products, got {}", dim * dim, products.len())));
        }
        let table = products
            .into_iter()
            .map(|row| {
                let mut acc = vec![field.zero(); dim];
                for (k, c) in row {
                    acc[k] = &acc[k] + &c;
                }
                acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Ok(AssocAlgebra { field: field.clone(), dim, table, unit: None })
    }

    /// Builds an algebra from the full dim³ array `c[(i*dim + j)*dim + k]`.
    pub fn from_structure_constants(field: &Field, dim: usize, constants: &[FieldElement]) -> Result<AssocAlgebra> {
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!("expected {} structure constants", dim * dim * dim)));
        }
        let products =
            (0..dim * dim).map(|ij| (0..dim).map(|k| (k, constants[ij * dim + k].clone())).collect()).collect();
        AssocAlgebra::from_products(field, dim, products)
    }

    pub fn with_unit(mut self, unit: Vector) -> Result<AssocAlgebra> {
        if unit.len() != self.dim {
            return Err(Error::DimensionMismatch("unit has the wrong length".into()));
        }
        self.unit = Some(unit);
        Ok(self)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn given_unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.table[i * self.dim + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn structure_constants(&self) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim * self.dim * self.dim];
        for ij in 0..self.dim * self.dim {
            for (k, c) in &self.table[ij] {
                out[ij * self.dim + k] = c.clone();
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] = &out[*k] + &(&s * c);
                }
            }
        }
        out
    }

    /// First failing triple `(i, j, k)` of basis elements, if any.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..self.dim {
                    let ek = self.basis_vector(k);
                    let lhs = self.mul(&ij, &ek);
                    let rhs = self.mul(&self.basis_vector(i), &self.mul(&self.basis_vector(j), &ek));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// The two-sided unit: the given one if present, otherwise solved for.
    pub fn unit(&self) -> Option<Vector> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        // u e_j = e_j and e_j u = e_j for all j; linear in u.
        let mut sys = LinearSystem::new(&self.field, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let target = if j == k { self.field.one() } else { self.field.zero() };
                let left: Vec<(usize, FieldElement)> =
                    (0..self.dim).map(|i| (i, self.structure_constant(i, j, k))).collect();
                sys.push(left, target.clone());
                let right: Vec<(usize, FieldElement)> =
                    (0..self.dim).map(|i| (i, self.structure_constant(j, i, k))).collect();
                sys.push(right, target);
            }
        }
        sys.solve_particular()
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vector> {
        let mut sys = LinearSystem::new(&self.field, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let row = (0..self.dim)
                    .map(|i| (i, &self.structure_constant(i, j, k) - &self.structure_constant(j, i, k)))
                    .collect();
                sys.push(row, self.field.zero());
            }
        }
        sys.solve().map(|s| s.kernel).unwrap_or_default()
    }

    fn trace_of_left_mult(&self, x: &[FieldElement]) -> FieldElement {
        let mut t = self.field.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let c = self.structure_constant(i, j, j);
                if !c.is_zero() {
                    t = &t + &(xi * &c);
                }
            }
        }
        t
    }

    /// Dimension of the radical for characteristic-zero fields (Dickson's trace criterion).
    fn radical_dim_char0(&self) -> usize {
        let mut sys = LinearSystem::new(&self.field, self.dim);
        for j in 0..self.dim {
            let row = (0..self.dim)
                .map(|i| (i, self.trace_of_left_mult(&self.mul(&self.basis_vector(i), &self.basis_vector(j)))))
                .collect();
            sys.push(row, self.field.zero());
        }
        sys.nullity()
    }
}

/// Linear-algebra helpers on subspaces given by spanning vectors.
pub(crate) fn independent_subset(field: &Field, vectors: &[Vector]) -> Vec<Vector> {
    let n = vectors.first().map(|v| v.len()).unwrap_or(0);
    let mut sys = LinearSystem::new(field, n);
    let mut out = Vec::new();
    for v in vectors {
        let before = sys.rank();
        sys.push(v.iter().cloned().enumerate().collect(), field.zero());
        if sys.rank() > before {
            out.push(v.clone());
        }
    }
    out
}

/// Coefficients expressing `target` in terms of `basis`, if it lies in their span.
pub(crate) fn express(field: &Field, basis: &[Vector], target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let mut sys = LinearSystem::new(field, basis.len());
    for (k, t) in target.iter().enumerate() {
        let row = basis.iter().enumerate().map(|(i, b)| (i, b[k].clone())).collect();
        sys.push(row, t.clone());
    }
    sys.solve_particular()
}

fn combine(field: &Field, basis: &[Vector], coeffs: &[FieldElement]) -> Vector {
    let n = basis.first().map(|v| v.len()).unwrap_or(0);
    let mut out = vec![field.zero(); n];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    out
}

fn sub_vec(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale_vec(c: &FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// One simple block of a semisimple algebra together with a full set of matrix units.
#[derive(Clone, Debug)]
pub struct WedderburnBlock {
    pub idempotent: Vector,
    pub block_dim: usize,
    /// `matrix_units[i][j]` is E_ij, with E_ij E_kl = δ_jk E_il.
    pub matrix_units: Vec<Vec<Vector>>,
    /// For each row index i, the local unit (from the caller's list) containing E_ii.
    pub local_unit_of: Vec<usize>,
}

/// Decomposition `A ≅ ⊕_k Mat_{d_k}(𝕜)`.
#[derive(Clone, Debug)]
pub struct WedderburnDecomposition {
    pub blocks: Vec<WedderburnBlock>,
    /// Columns are the matrix units of all blocks, in block order and row-major within a block.
    pub change_of_basis: ScalarMatrix,
}

impl WedderburnDecomposition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.block_dim).collect()
    }
}

/// Decomposes a semisimple algebra whose simple blocks are split over the working field.
pub fn decompose_semisimple_algebra(a: &AssocAlgebra) -> Result<WedderburnDecomposition> {
    let unit = a.unit().ok_or_else(|| Error::NotSemisimple("the algebra has no unit".into()))?;
    decompose_adapted(a, &[unit])
}

/// Like [`decompose_semisimple_algebra`], but every diagonal matrix unit is
/// chosen inside one of the given orthogonal idempotents (which must sum to 1).
pub fn decompose_adapted(a: &AssocAlgebra, local_units: &[Vector]) -> Result<WedderburnDecomposition> {
    let field = a.field().clone();
    let unit = a.unit().ok_or_else(|| Error::NotSemisimple("the algebra has no unit".into()))?;
    if a.dim() == 0 {
        return Ok(WedderburnDecomposition { blocks: Vec::new(), change_of_basis: ScalarMatrix::zeros(&field, 0, 0) });
    }
    if field.characteristic() == 0 {
        let rad = a.radical_dim_char0();
        if rad > 0 {
            return Err(Error::NotSemisimple(format!("radical of dimension {rad}")));
        }
    }
    let center = a.center();
    if field.characteristic() > 0 {
        check_center_reduced(a, &center)?;
    }
    let mut central = Vec::new();
    split_center(a, unit.clone(), center.clone(), &mut central)?;
    let mut blocks = Vec::new();
    for c in central {
        blocks.push(simple_block(a, &c, local_units)?);
    }
    let total: usize = blocks.iter().map(|b| b.block_dim * b.block_dim).sum();
    if total != a.dim() {
        return Err(Error::NotSemisimple(format!("matrix blocks account for {total} of {} dimensions", a.dim())));
    }
    blocks.sort_by(|x, y| x.block_dim.cmp(&y.block_dim).then_with(|| x.idempotent.cmp(&y.idempotent)));
    let mut cob = ScalarMatrix::zeros(&field, a.dim(), a.dim());
    let mut col = 0;
    for b in &blocks {
        for row in &b.matrix_units {
            for e in row {
                for (r, v) in e.iter().enumerate() {
                    cob.set(r, col, v.clone());
                }
                col += 1;
            }
        }
    }
    Ok(WedderburnDecomposition { blocks, change_of_basis: cob })
}

/// In characteristic p the Frobenius map is additive on a commutative algebra,
/// so nilpotents of the center form the kernel of a high enough Frobenius power.
fn check_center_reduced(a: &AssocAlgebra, center: &[Vector]) -> Result<()> {
    let field = a.field();
    let p = field.characteristic();
    let mut power = 1u64;
    while (power as usize) < center.len().max(2) {
        power *= p;
    }
    let images: Vec<Vector> = center
        .iter()
        .map(|z| {
            let mut x = z.clone();
            let mut e = 1u64;
            while e < power {
                let mut y = x.clone();
                for _ in 1..p {
                    y = a.mul(&y, &x);
                }
                x = y;
                e *= p;
            }
            x
        })
        .collect();
    let mut sys = LinearSystem::new(field, center.len());
    for r in 0..a.dim() {
        sys.push(images.iter().enumerate().map(|(i, v)| (i, v[r].clone())).collect(), field.zero());
    }
    if sys.nullity() > 0 {
        return Err(Error::NotSemisimple(format!("the center has nilpotent elements ({} dimensions)", sys.nullity())));
    }
    Ok(())
}

/// Minimal polynomial of `x` inside the unital subalgebra with unit `one`.
fn min_poly(a: &AssocAlgebra, one: &[FieldElement], x: &[FieldElement]) -> Vec<FieldElement> {
    let field = a.field();
    let mut powers = vec![one.to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        if let Some(c) = express(field, &powers, &next) {
            let mut poly: Vec<FieldElement> = c.iter().map(|v| -v).collect();
            poly.push(field.one());
            return poly;
        }
        powers.push(next);
    }
}

fn split_center(a: &AssocAlgebra, c: Vector, basis: Vec<Vector>, out: &mut Vec<Vector>) -> Result<()> {
    let field = a.field().clone();
    let piece: Vec<Vector> = independent_subset(&field, &basis.iter().map(|z| a.mul(&c, z)).collect::<Vec<_>>());
    if piece.len() <= 1 {
        out.push(c);
        return Ok(());
    }
    let mut witness: Option<Vec<FieldElement>> = None;
    for z in &piece {
        let mp = min_poly(a, &c, z);
        if mp.len() <= 2 {
            continue;
        }
        let roots = roots_in_field(&field, &mp);
        let Some(lambda) = roots.first() else {
            witness.get_or_insert(mp);
            continue;
        };
        let b = sub_vec(z, &scale_vec(lambda, &c));
        let ideal = independent_subset(&field, &piece.iter().map(|y| a.mul(&b, y)).collect::<Vec<_>>());
        let e = left_identity(a, &ideal, &ideal)
            .ok_or_else(|| Error::NotSemisimple("a central ideal has no idempotent generator".into()))?;
        let rest = sub_vec(&c, &e);
        split_center(a, e, piece.clone(), out)?;
        split_center(a, rest, piece.clone(), out)?;
        return Ok(());
    }
    match witness {
        Some(mp) => Err(Error::NotSplitOverField { min_poly: format_poly(&mp), field: field.to_string() }),
        None => Err(Error::NotSemisimple("central piece without a splitting element".into())),
    }
}

/// An element `f` of span(`space`) with `f y = y` for every `y` in `targets`.
fn left_identity(a: &AssocAlgebra, space: &[Vector], targets: &[Vector]) -> Option<Vector> {
    let field = a.field();
    let mut sys = LinearSystem::new(field, space.len());
    let prods: Vec<Vec<Vector>> = space.iter().map(|s| targets.iter().map(|t| a.mul(s, t)).collect()).collect();
    for (ti, t) in targets.iter().enumerate() {
        for k in 0..a.dim() {
            let row = (0..space.len()).map(|i| (i, prods[i][ti][k].clone())).collect();
            sys.push(row, t[k].clone());
        }
    }
    let coeffs = sys.solve_particular()?;
    Some(combine(field, space, &coeffs))
}

fn span_products(a: &AssocAlgebra, left: &[FieldElement], right: &[FieldElement]) -> Vec<Vector> {
    let field = a.field();
    let v: Vec<Vector> = (0..a.dim()).map(|i| a.mul(&a.mul(left, &a.basis_vector(i)), right)).collect();
    independent_subset(field, &v)
}

fn simple_block(a: &AssocAlgebra, c: &Vector, local_units: &[Vector]) -> Result<WedderburnBlock> {
    let field = a.field().clone();
    let block_basis = span_products(a, c, c);
    let start = local_units
        .iter()
        .map(|f| a.mul(c, f))
        .find(|e| e.iter().any(|x| !x.is_zero()))
        .ok_or_else(|| Error::NotSemisimple("central idempotent orthogonal to every local unit".into()))?;
    // Shrink to a primitive idempotent.
    let mut e = start;
    loop {
        let corner = span_products(a, &e, &e);
        if corner.len() == 1 {
            break;
        }
        let mut next = None;
        let mut witness = None;
        for x in &corner {
            let mp = min_poly(a, &e, x);
            if mp.len() <= 2 {
                continue;
            }
            let roots = roots_in_field(&field, &mp);
            let Some(lambda) = roots.first() else {
                witness.get_or_insert(mp);
                continue;
            };
            let b = sub_vec(x, &scale_vec(lambda, &e));
            let ideal = independent_subset(&field, &corner.iter().map(|y| a.mul(&b, y)).collect::<Vec<_>>());
            let f = left_identity(a, &ideal, &ideal)
                .ok_or_else(|| Error::NotSemisimple("a one-sided ideal has no idempotent generator".into()))?;
            next = Some(f);
            break;
        }
        match (next, witness) {
            (Some(f), _) => e = f,
            (None, Some(mp)) => {
                return Err(Error::NotSplitOverField { min_poly: format_poly(&mp), field: field.to_string() })
            }
            (None, None) => return Err(Error::NotSemisimple("corner algebra without idempotents".into())),
        }
    }
    // Column space A e, adapted to the local units, with e first in its piece.
    let mut cols: Vec<Vector> = Vec::new();
    let mut local_unit_of = Vec::new();
    for (s, f) in local_units.iter().enumerate() {
        let fe = a.mul(f, &e);
        let mut candidates = Vec::new();
        if fe == e {
            candidates.push(e.clone());
        }
        candidates.extend(span_products(a, &a.mul(f, c), &e));
        for v in independent_subset(&field, &candidates) {
            cols.push(v);
            local_unit_of.push(s);
        }
    }
    let d = cols.len();
    if d * d != block_basis.len() {
        return Err(Error::NotSemisimple(format!(
            "block of dimension {} is not a {d}x{d} matrix algebra",
            block_basis.len()
        )));
    }
    let row_space = span_products(a, &e, c);
    let mut rows = Vec::with_capacity(d);
    for j in 0..d {
        let mut sys = LinearSystem::new(&field, row_space.len());
        for (i, col) in cols.iter().enumerate() {
            let prods: Vec<Vector> = row_space.iter().map(|r| a.mul(r, col)).collect();
            for k in 0..a.dim() {
                let target = if i == j { e[k].clone() } else { field.zero() };
                sys.push((0..row_space.len()).map(|t| (t, prods[t][k].clone())).collect(), target);
            }
        }
        let coeffs = sys
            .solve_particular()
            .ok_or_else(|| Error::NotSemisimple("degenerate pairing between row and column spaces".into()))?;
        rows.push(combine(&field, &row_space, &coeffs));
    }
    let matrix_units: Vec<Vec<Vector>> =
        cols.iter().map(|col| rows.iter().map(|row| a.mul(col, row)).collect()).collect();
    let diag_sum =
        (0..d).fold(a.zero_vector(), |acc, i| acc.iter().zip(&matrix_units[i][i]).map(|(x, y)| x + y).collect());
    if &diag_sum != c {
        return Err(Error::NotSemisimple("diagonal matrix units do not sum to the block unit".into()));
    }
    Ok(WedderburnBlock { idempotent: c.clone(), block_dim: d, matrix_units, local_unit_of })
}
