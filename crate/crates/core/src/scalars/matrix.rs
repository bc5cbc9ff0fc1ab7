use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Dense matrix over a [`Field`], stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ScalarMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix { field: field.clone(), rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<ScalarMatrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ScalarMatrix { field: field.clone(), rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> ScalarMatrix {
        let data = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        ScalarMatrix::from_rows(field, data).expect("rectangular literal")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, FieldElement)>> {
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut sys = LinearSystem::new(&self.field, self.cols);
        for row in self.sparse_rows() {
            sys.push(row, self.field.zero());
        }
        sys.rank()
    }

    pub fn inverse(&self) -> Result<ScalarMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = ScalarMatrix::zeros(&self.field, n, n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            let sol = solve_linear(self, &e)?.ok_or_else(|| Error::NotInvertible("singular matrix".into()))?;
            if !sol.kernel.is_empty() {
                return Err(Error::NotInvertible("singular matrix".into()));
            }
            for i in 0..n {
                out.set(i, j, sol.particular[i].clone());
            }
        }
        Ok(out)
    }
}

/// A feasible solution set `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<FieldElement>,
    pub kernel: Vec<Vec<FieldElement>>,
}

/// Solves `a x = b` exactly.  `Ok(None)` means the system is infeasible.
pub fn solve_linear(a: &ScalarMatrix, b: &[FieldElement]) -> Result<Option<LinearSolution>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", b.len(), a.rows)));
    }
    let mut sys = LinearSystem::new(&a.field, a.cols);
    for (row, rhs) in a.sparse_rows().into_iter().zip(b) {
        sys.push(row, rhs.clone());
    }
    Ok(sys.solve())
}

/// Incremental sparse Gaussian elimination.  Equations are added one at a time
/// and reduced against the current echelon form immediately.
#[derive(Clone)]
pub struct LinearSystem {
    field: Field,
    unknowns: usize,
    /// pivot column -> normalised row (entries strictly after the pivot) and rhs
    pivots: BTreeMap<usize, (Vec<(usize, FieldElement)>, FieldElement)>,
    infeasible: bool,
}

impl LinearSystem {
    pub fn new(field: &Field, unknowns: usize) -> LinearSystem {
        LinearSystem { field: field.clone(), unknowns, pivots: BTreeMap::new(), infeasible: false }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ coeff·x[col] = rhs`.  Repeated columns are summed.
    pub fn push(&mut self, row: Vec<(usize, FieldElement)>, rhs: FieldElement) {
        let mut r: BTreeMap<usize, FieldElement> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.unknowns, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = r.entry(c).or_insert_with(|| self.field.zero());
            *e = &*e + &v;
            if e.is_zero() {
                r.remove(&c);
            }
        }
        let mut rhs = rhs;
        let mut from = 0;
        loop {
            let Some((&c, v)) = r.range(from..).next() else { break };
            let v = v.clone();
            if let Some((prow, prhs)) = self.pivots.get(&c) {
                r.remove(&c);
                for (pc, pv) in prow {
                    let e = r.entry(*pc).or_insert_with(|| self.field.zero());
                    *e = &*e - &(&v * pv);
                    if e.is_zero() {
                        r.remove(pc);
                    }
                }
                rhs = &rhs - &(&v * prhs);
            }
            from = c + 1;
        }
        let Some((&lead, lv)) = r.iter().next() else {
            if !rhs.is_zero() {
                self.infeasible = true;
            }
            return;
        };
        let inv = lv.inv().expect("nonzero leading entry");
        let rest: Vec<(usize, FieldElement)> = r.iter().skip(1).map(|(c, v)| (*c, v * &inv)).collect();
        self.pivots.insert(lead, (rest, &rhs * &inv));
    }

    /// Particular solution (free variables zero) and a kernel basis.
    pub fn solve(&self) -> Option<LinearSolution> {
        if self.infeasible {
            return None;
        }
        let zero = self.field.zero();
        let particular = self.back_substitute(|_| zero.clone(), true);
        let free: Vec<usize> = (0..self.unknowns).filter(|c| !self.pivots.contains_key(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| self.back_substitute(|c| if c == f { self.field.one() } else { zero.clone() }, false))
            .collect();
        Some(LinearSolution { particular, kernel })
    }

    /// Only the particular solution; cheaper than [`LinearSystem::solve`].
    pub fn solve_particular(&self) -> Option<Vec<FieldElement>> {
        if self.infeasible {
            return None;
        }
        let zero = self.field.zero();
        Some(self.back_substitute(|_| zero.clone(), true))
    }

    /// Dimension of the solution space's direction (number of free variables).
    pub fn nullity(&self) -> usize {
        self.unknowns - self.pivots.len()
    }

    fn back_substitute(&self, free_value: impl Fn(usize) -> FieldElement, with_rhs: bool) -> Vec<FieldElement> {
        let mut x: Vec<Option<FieldElement>> = vec![None; self.unknowns];
        for c in 0..self.unknowns {
            if !self.pivots.contains_key(&c) {
                x[c] = Some(free_value(c));
            }
        }
        for (&c, (row, rhs)) in self.pivots.iter().rev() {
            let mut v = if with_rhs { rhs.clone() } else { self.field.zero() };
            for (rc, rv) in row {
                let xv = x[*rc].as_ref().expect("later columns are resolved first");
                if !xv.is_zero() {
                    v = &v - &(rv * xv);
                }
            }
            x[c] = Some(v);
        }
        x.into_iter().map(|v| v.unwrap()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_system() {
        let q = Field::rationals();
        let a = ScalarMatrix::from_i64(&q, &[&[1, 1], &[1, -1]]);
        let sol = solve_linear(&a, &[q.one(), q.zero()]).unwrap().unwrap();
        let half = q.from_rational(&num_rational::BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(sol.particular, vec![half.clone(), half]);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn zero_times_x_equals_one_is_infeasible() {
        let q = Field::rationals();
        let a = ScalarMatrix::from_i64(&q, &[&[0]]);
        assert!(solve_linear(&a, &[q.one()]).unwrap().is_none());
    }

    #[test]
    fn gf2_kernel() {
        let k = Field::prime(2);
        let a = ScalarMatrix::from_i64(&k, &[&[1, 1], &[1, 1]]);
        let sol = solve_linear(&a, &[k.zero(), k.zero()]).unwrap().unwrap();
        assert_eq!(sol.kernel, vec![vec![k.one(), k.one()]]);
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Field::rationals();
        let a = ScalarMatrix::from_i64(&q, &[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ScalarMatrix::identity(&q, 2));
        assert!(ScalarMatrix::from_i64(&q, &[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
