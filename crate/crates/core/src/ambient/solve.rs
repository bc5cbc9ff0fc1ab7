//! Unknown 2-morphisms constrained by linear equations.

use std::collections::BTreeMap;

use super::cell::TwoCell;
use super::object::Labels;
use super::path::{Config, Path};
use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement, LinearSystem};

/// An unknown `X: P ⇒ Q` whose entries are the unknowns of a linear system.
/// Every entry between basis paths with equal boundary is a free unknown
/// until equations are added.
#[derive(Clone)]
pub struct CellProblem {
    field: Field,
    src: Path,
    tgt: Path,
    unknowns: Vec<(Config, Config)>,
    sys: LinearSystem,
    equations: usize,
}

/// Solution set `particular + span(kernel)` of a [`CellProblem`].
#[derive(Clone, Debug)]
pub struct CellSolution {
    pub particular: TwoCell,
    pub kernel: Vec<TwoCell>,
}

impl CellProblem {
    pub fn new(field: &Field, src: &Path, tgt: &Path) -> Result<CellProblem> {
        if src.source() != tgt.source() || src.target() != tgt.target() {
            return Err(Error::DimensionMismatch(format!("{src:?} and {tgt:?} are not parallel")));
        }
        let ns = src.source().len();
        let mut by_boundary: BTreeMap<(Labels, Labels), Vec<Config>> = BTreeMap::new();
        for d in tgt.configs() {
            by_boundary.entry((d[..ns].to_vec(), tgt.target_labels(&d))).or_default().push(d);
        }
        let mut unknowns = Vec::new();
        for c in src.configs() {
            if let Some(ds) = by_boundary.get(&(c[..ns].to_vec(), src.target_labels(&c))) {
                unknowns.extend(ds.iter().map(|d| (c.clone(), d.clone())));
            }
        }
        let sys = LinearSystem::new(field, unknowns.len());
        Ok(CellProblem { field: field.clone(), src: src.clone(), tgt: tgt.clone(), unknowns, sys, equations: 0 })
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns.len()
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    pub fn is_infeasible(&self) -> bool {
        self.sys.is_infeasible()
    }

    /// Dimension of the solution space (free unknowns left).
    pub fn nullity(&self) -> usize {
        self.sys.nullity()
    }

    fn cell(&self, values: &[FieldElement]) -> Result<TwoCell> {
        let entries = self
            .unknowns
            .iter()
            .zip(values)
            .filter(|(_, v)| !v.is_zero())
            .map(|((c, d), v)| (c.clone(), d.clone(), v.clone()))
            .collect::<Vec<_>>();
        TwoCell::from_entries(&self.field, &self.src, &self.tgt, entries)
    }

    /// Adds the equations `lhs(X) = rhs`, where `lhs` must be linear in `X`.
    pub fn require(&mut self, lhs: impl Fn(&TwoCell) -> Result<TwoCell>, rhs: &TwoCell) -> Result<()> {
        let mut rows: BTreeMap<(Config, Config), Vec<(usize, FieldElement)>> = BTreeMap::new();
        let mut unit = vec![self.field.zero(); self.unknowns.len()];
        for j in 0..self.unknowns.len() {
            unit[j] = self.field.one();
            let x = self.cell(&unit)?;
            unit[j] = self.field.zero();
            let image = lhs(&x)?;
            if image.source() != rhs.source() || image.target() != rhs.target() {
                return Err(Error::DimensionMismatch("both sides of an equation must be parallel".into()));
            }
            for (c, d, v) in image.entries() {
                rows.entry((c.clone(), d.clone())).or_default().push((j, v.clone()));
            }
        }
        for (c, d, _) in rhs.entries() {
            rows.entry((c.clone(), d.clone())).or_default();
        }
        for ((c, d), row) in rows {
            self.sys.push(row, rhs.entry(&c, &d));
            self.equations += 1;
        }
        Ok(())
    }

    /// Forces the entry of `X` at `(c, d)` to equal `v`.
    pub fn fix(&mut self, c: &[u32], d: &[u32], v: FieldElement) -> Result<()> {
        let j = self
            .unknowns
            .iter()
            .position(|(x, y)| x == c && y == d)
            .ok_or_else(|| Error::InvalidInput(format!("no unknown at {c:?} -> {d:?}")))?;
        self.sys.push(vec![(j, self.field.one())], v);
        self.equations += 1;
        Ok(())
    }

    pub fn solve(&self) -> Option<CellSolution> {
        let sol = self.sys.solve()?;
        let particular = self.cell(&sol.particular).ok()?;
        let kernel = sol.kernel.iter().map(|k| self.cell(k)).collect::<Result<Vec<_>>>().ok()?;
        Some(CellSolution { particular, kernel })
    }

    pub fn particular(&self) -> Option<TwoCell> {
        self.cell(&self.sys.solve_particular()?).ok()
    }

    /// One-line summary for infeasibility reports.
    pub fn summary(&self) -> String {
        format!(
            "{} equations in {} unknowns, coefficient rank {}, rank defect {}{}",
            self.equations,
            self.unknowns.len(),
            self.sys.rank(),
            self.unknowns.len() - self.sys.rank(),
            if self.sys.is_infeasible() { ", inconsistent" } else { "" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::{Generator, TwoObject, Wire};

    #[test]
    fn recovers_a_scalar_from_its_double() {
        let k = Field::rationals();
        let x = TwoObject::single(Wire::new("X", 1));
        let p = Path::generator(&Generator::new("p", x.clone(), x, vec![(vec![0], vec![0], 2)]).unwrap());
        let cs = p.configs();
        let target = TwoCell::from_entries(
            &k,
            &p,
            &p,
            vec![(cs[0].clone(), cs[1].clone(), k.from_i64(4)), (cs[1].clone(), cs[1].clone(), k.from_i64(2))],
        )
        .unwrap();
        let mut prob = CellProblem::new(&k, &p, &p).unwrap();
        assert_eq!(prob.unknowns(), 4);
        prob.require(|x| Ok(x.scale(&k.from_i64(2))), &target).unwrap();
        let sol = prob.solve().unwrap();
        assert!(sol.kernel.is_empty());
        assert_eq!(sol.particular.entry(&cs[0], &cs[1]), k.from_i64(2));
        assert_eq!(sol.particular.entry(&cs[1], &cs[1]), k.one());
    }

    #[test]
    fn inconsistent_equations_are_reported() {
        let k = Field::rationals();
        let x = TwoObject::single(Wire::new("X", 1));
        let p = Path::identity(&x);
        let mut prob = CellProblem::new(&k, &p, &p).unwrap();
        let id = TwoCell::identity(&k, &p);
        prob.require(|x| Ok(x.clone()), &id).unwrap();
        prob.require(|x| Ok(x.clone()), &id.scale(&k.from_i64(2))).unwrap();
        assert!(prob.is_infeasible());
        assert!(prob.solve().is_none());
        assert!(prob.summary().contains("inconsistent"));
    }
}
