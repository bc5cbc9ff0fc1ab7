use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use super::object::{Labels, TwoObject};
use crate::error::{Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// An atomic 1-morphism between two objects, described skeletally by the
/// multiplicity of each target simple in the image of each source simple.
pub struct Generator {
    id: u64,
    name: String,
    src: TwoObject,
    tgt: TwoObject,
    /// input labels -> (output labels, multiplicity), outputs sorted
    table: BTreeMap<Labels, Vec<(Labels, u32)>>,
    adjoint: OnceLock<Gen>,
}

pub type Gen = Arc<Generator>;

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?} → {:?}", self.name, self.src, self.tgt)
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for Generator {}

impl Generator {
    /// Entries are `(input labels, output labels, multiplicity)`; repeated pairs add up.
    pub fn new(
        name: &str,
        src: TwoObject,
        tgt: TwoObject,
        entries: impl IntoIterator<Item = (Labels, Labels, u32)>,
    ) -> Result<Gen> {
        let mut acc: BTreeMap<Labels, BTreeMap<Labels, u32>> = BTreeMap::new();
        for (i, o, m) in entries {
            check_labels(name, &src, &i)?;
            check_labels(name, &tgt, &o)?;
            if m == 0 {
                continue;
            }
            if src.is_graded() && tgt.is_graded() && src.grade(&i) != tgt.grade(&o) {
                return Err(Error::Grading(format!(
                    "1-morphism `{name}` sends {i:?} to {o:?} across different degrees"
                )));
            }
            *acc.entry(i).or_default().entry(o).or_insert(0) += m;
        }
        let table = acc.into_iter().map(|(i, outs)| (i, outs.into_iter().collect())).collect();
        Ok(Arc::new(Generator {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            src,
            tgt,
            table,
            adjoint: OnceLock::new(),
        }))
    }

    /// Builds a generator from a flattened dims matrix (target simples × source simples).
    pub fn from_dims(name: &str, src: TwoObject, tgt: TwoObject, dims: &[Vec<u32>]) -> Result<Gen> {
        let ss = src.simples();
        let ts = tgt.simples();
        if dims.len() != ts.len() || dims.iter().any(|r| r.len() != ss.len()) {
            return Err(Error::DimensionMismatch(format!("`{name}` needs a {}x{} dims matrix", ts.len(), ss.len())));
        }
        let mut entries = Vec::new();
        for (t, row) in ts.iter().zip(dims) {
            for (s, &m) in ss.iter().zip(row) {
                entries.push((s.clone(), t.clone(), m));
            }
        }
        Generator::new(name, src, tgt, entries)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &TwoObject {
        &self.src
    }

    pub fn target(&self) -> &TwoObject {
        &self.tgt
    }

    /// Outputs reachable from an input, with multiplicities.
    pub fn outputs(&self, input: &[u32]) -> &[(Labels, u32)] {
        self.table.get(input).map(|v| &v[..]).unwrap_or(&[])
    }

    pub fn multiplicity(&self, input: &[u32], output: &[u32]) -> u32 {
        self.outputs(input).iter().find(|(o, _)| o == output).map(|(_, m)| *m).unwrap_or(0)
    }

    /// All `(input, output, multiplicity)` triples with nonzero multiplicity.
    pub fn entries(&self) -> impl Iterator<Item = (&Labels, &Labels, u32)> {
        self.table.iter().flat_map(|(i, outs)| outs.iter().map(move |(o, m)| (i, o, *m)))
    }

    /// Dims matrix, target simples × source simples.
    pub fn dims(&self) -> Vec<Vec<u32>> {
        let ss = self.src.simples();
        self.tgt.simples().iter().map(|t| ss.iter().map(|s| self.multiplicity(s, t)).collect()).collect()
    }

    /// The adjoint generator: transposed dims, with multiplicity spaces identified.
    /// Repeated calls return the same generator.
    pub fn adjoint(self: &Arc<Self>) -> Gen {
        self.adjoint
            .get_or_init(|| {
                let entries: Vec<(Labels, Labels, u32)> =
                    self.entries().map(|(i, o, m)| (o.clone(), i.clone(), m)).collect();
                Generator::new(&format!("{}*", self.name), self.tgt.clone(), self.src.clone(), entries)
                    .expect("transposed data of a valid generator is valid")
            })
            .clone()
    }
}

fn check_labels(name: &str, obj: &TwoObject, labels: &[u32]) -> Result<()> {
    if labels.len() != obj.len() || labels.iter().zip(obj.wires()).any(|(&l, w)| l >= w.rank()) {
        return Err(Error::InvalidInput(format!("`{name}`: label tuple {labels:?} does not fit {obj:?}")));
    }
    Ok(())
}
