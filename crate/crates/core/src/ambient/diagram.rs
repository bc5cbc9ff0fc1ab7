use super::cell::TwoCell;
use super::generator::Gen;
use super::path::Path;
use crate::error::{Error, Result};
use crate::scalars::Field;

/// Builds a 2-cell as a sequence of local rewrites of a composite.
///
/// Each step replaces a block of layers by applying a 2-cell in context, or
/// exchanges two adjacent layers acting on disjoint wires.
#[derive(Clone)]
pub struct Rewrite {
    field: Field,
    start: Path,
    cell: Option<TwoCell>,
}

impl Rewrite {
    pub fn new(field: &Field, start: &Path) -> Rewrite {
        Rewrite { field: field.clone(), start: start.clone(), cell: None }
    }

    pub fn current(&self) -> &Path {
        self.cell.as_ref().map(|c| c.target()).unwrap_or(&self.start)
    }

    fn push(&mut self, step: TwoCell) -> Result<()> {
        self.cell = Some(match self.cell.take() {
            None => step,
            Some(c) => c.then(&step)?,
        });
        Ok(())
    }

    /// Applies `cell` to layers `k..` of the current composite at wire `offset`.
    pub fn apply(mut self, cell: &TwoCell, k: usize, offset: usize) -> Result<Rewrite> {
        let step = cell.apply_in(self.current(), k, offset)?;
        self.push(step)?;
        Ok(self)
    }

    /// Like [`Rewrite::apply`], inferring the wire offset from layer `k`.
    pub fn at(self, cell: &TwoCell, k: usize) -> Result<Rewrite> {
        let first =
            cell.source().layers().first().ok_or_else(|| {
                Error::InvalidInput("cannot infer the offset of a cell with an identity source".into())
            })?;
        let host = self
            .current()
            .layers()
            .get(k)
            .ok_or_else(|| Error::DimensionMismatch(format!("layer {k} does not exist in {:?}", self.current())))?;
        let offset = host
            .offset
            .checked_sub(first.offset)
            .ok_or_else(|| Error::DimensionMismatch(format!("{:?} cannot sit at layer {k}", cell.source())))?;
        self.apply(cell, k, offset)
    }

    /// Exchanges layers `j` and `j + 1`.
    pub fn swap(mut self, j: usize) -> Result<Rewrite> {
        let step = TwoCell::interchange(&self.field, self.current(), j)?;
        self.push(step)?;
        Ok(self)
    }

    /// Moves the layer at position `from` to position `to` by repeated exchanges.
    pub fn slide(mut self, from: usize, to: usize) -> Result<Rewrite> {
        if from < to {
            for j in from..to {
                self = self.swap(j)?;
            }
        } else {
            for j in (to..from).rev() {
                self = self.swap(j)?;
            }
        }
        Ok(self)
    }

    /// Reorders the layers of the current composite into `target` using only
    /// exchanges of layers that act on disjoint wires.
    pub fn reorder_to(mut self, target: &Path) -> Result<Rewrite> {
        let n = self.current().len();
        if target.len() != n || target.source() != self.current().source() {
            return Err(Error::DimensionMismatch(format!("{:?} is not a reordering of {:?}", target, self.current())));
        }
        for k in 0..n {
            if self.current().layers()[k] == target.layers()[k] {
                continue;
            }
            let cur = self.current().clone();
            let from = (k + 1..n).find(|&j| {
                let mut p = cur.clone();
                for s in (k..j).rev() {
                    match p.swap(s) {
                        Ok(q) => p = q,
                        Err(_) => return false,
                    }
                }
                p.layers()[k] == target.layers()[k]
            });
            let from = from.ok_or_else(|| {
                Error::DimensionMismatch(format!("cannot bring layer {k} of {target:?} down in {cur:?}"))
            })?;
            self = self.slide(from, k)?;
        }
        Ok(self)
    }

    /// Index of the first layer at or after `from` that applies `gen`.
    pub fn find(&self, gen: &Gen, from: usize) -> Option<usize> {
        self.current().layers().iter().enumerate().skip(from).find(|(_, l)| l.gen.id() == gen.id()).map(|(i, _)| i)
    }

    pub fn finish(self) -> TwoCell {
        match self.cell {
            Some(c) => c,
            None => TwoCell::identity(&self.field, &self.start),
        }
    }
}
