use std::fmt;
use std::sync::Arc;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// A label tuple: one simple index per wire.
pub type Labels = Vec<u32>;

/// A single tensor factor of an object: a finite semisimple category with
/// `rank` simples, optionally graded by a finite group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Wire {
    name: Arc<str>,
    rank: u32,
    grading: Option<(Arc<FiniteGroup>, Arc<[u32]>)>,
}

impl fmt::Debug for Wire {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name, self.rank)
    }
}

impl Wire {
    pub fn new(name: &str, rank: u32) -> Wire {
        Wire { name: name.into(), rank, grading: None }
    }

    /// A wire whose i-th simple sits in degree `grades[i]` of `group`.
    pub fn graded(name: &str, group: &Arc<FiniteGroup>, grades: Vec<u32>) -> Result<Wire> {
        if grades.iter().any(|&g| g as usize >= group.order()) {
            return Err(Error::Grading(format!("wire `{name}` uses a degree outside {}", group.name())));
        }
        Ok(Wire { name: name.into(), rank: grades.len() as u32, grading: Some((group.clone(), grades.into())) })
    }

    /// Same simples and grading under a different name.
    pub fn renamed(&self, name: &str) -> Wire {
        Wire { name: name.into(), ..self.clone() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        self.grading.as_ref().map(|g| &g.0)
    }

    pub fn grades(&self) -> Option<&[u32]> {
        self.grading.as_ref().map(|g| &g.1[..])
    }
}

/// An object of the ambient 2-category: a Deligne product of wires.  The empty
/// product is the monoidal unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TwoObject {
    wires: Vec<Wire>,
}

impl fmt::Debug for TwoObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.wires.is_empty() {
            return write!(f, "I");
        }
        let names: Vec<String> = self.wires.iter().map(|w| format!("{w:?}")).collect();
        write!(f, "{}", names.join("□"))
    }
}

impl TwoObject {
    pub fn unit() -> TwoObject {
        TwoObject { wires: Vec::new() }
    }

    pub fn single(w: Wire) -> TwoObject {
        TwoObject { wires: vec![w] }
    }

    pub fn from_wires(wires: Vec<Wire>) -> TwoObject {
        TwoObject { wires }
    }

    pub fn wires(&self) -> &[Wire] {
        &self.wires
    }

    pub fn len(&self) -> usize {
        self.wires.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wires.is_empty()
    }

    /// Monoidal product: wires side by side.
    pub fn boxed(&self, other: &TwoObject) -> TwoObject {
        let mut wires = self.wires.clone();
        wires.extend(other.wires.iter().cloned());
        TwoObject { wires }
    }

    /// Number of simples: the product of the wire ranks.
    pub fn rank(&self) -> usize {
        self.wires.iter().map(|w| w.rank as usize).product()
    }

    /// All label tuples in row-major order (last wire varies fastest).
    pub fn simples(&self) -> Vec<Labels> {
        let mut out = vec![Vec::new()];
        for w in &self.wires {
            let mut next = Vec::with_capacity(out.len() * w.rank as usize);
            for prefix in &out {
                for s in 0..w.rank {
                    let mut v = prefix.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// Position of a label tuple in [`TwoObject::simples`].
    pub fn flat_index(&self, labels: &[u32]) -> usize {
        let mut idx = 0usize;
        for (w, &l) in self.wires.iter().zip(labels) {
            idx = idx * w.rank as usize + l as usize;
        }
        idx
    }

    pub fn is_graded(&self) -> bool {
        self.wires.iter().all(|w| w.grading.is_some())
    }

    /// The group grading this object, if all wires are graded by the same group.
    pub fn group(&self) -> Option<Arc<FiniteGroup>> {
        self.wires.first().and_then(|w| w.group().cloned())
    }

    /// Degree of a simple: the product of the wire degrees in wire order.
    pub fn grade(&self, labels: &[u32]) -> Option<usize> {
        let mut g: Option<usize> = None;
        for (w, &l) in self.wires.iter().zip(labels) {
            let (group, grades) = w.grading.as_ref()?;
            g = Some(match g {
                None => grades[l as usize] as usize,
                Some(acc) => group.mul(acc, grades[l as usize] as usize),
            });
        }
        Some(g.unwrap_or(0))
    }

    /// Graded rank function `G → ℕ` (only for graded objects).
    pub fn graded_rank(&self) -> Option<Vec<usize>> {
        let group = self.group()?;
        if !self.is_graded() {
            return None;
        }
        let mut counts = vec![0usize; group.order()];
        for s in self.simples() {
            counts[self.grade(&s)?] += 1;
        }
        Some(counts)
    }
}
