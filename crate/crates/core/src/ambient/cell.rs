use std::collections::BTreeMap;
use std::fmt;

use super::object::{Labels, TwoObject};
use super::path::{Config, Path};
use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement, ScalarMatrix};

type Row = Vec<(Config, FieldElement)>;

/// A 2-morphism between two parallel composites, stored as a sparse matrix
/// from source basis paths to target basis paths.  Entries only connect paths
/// with the same source simple and the same target simple.
#[derive(Clone)]
pub struct TwoCell {
    field: Field,
    src: Path,
    tgt: Path,
    rows: BTreeMap<Config, Row>,
}

/// Location of the first disagreement between two 2-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDifference {
    pub source_simple: Labels,
    pub target_simple: Labels,
    pub from: Config,
    pub to: Config,
    pub left: String,
    pub right: String,
}

impl fmt::Display for CellDifference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block {:?} -> {:?}, entry {:?} -> {:?}: {} vs {}",
            self.source_simple, self.target_simple, self.from, self.to, self.left, self.right
        )
    }
}

impl fmt::Debug for TwoCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TwoCell {:?} => {:?}", self.src, self.tgt)?;
        for (c, row) in &self.rows {
            for (d, v) in row {
                writeln!(f, "  {c:?} -> {d:?}: {v}")?;
            }
        }
        Ok(())
    }
}

fn merge_row(row: &mut Row) {
    row.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Row = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = &*lv + &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

impl TwoCell {
    fn check_parallel(src: &Path, tgt: &Path) -> Result<()> {
        if src.source() != tgt.source() || src.target() != tgt.target() {
            return Err(Error::DimensionMismatch(format!("{src:?} and {tgt:?} are not parallel")));
        }
        Ok(())
    }

    /// Builds a cell from `(source path, target path, coefficient)` triples.
    /// Entries must join paths with equal source simples and equal target simples.
    pub fn from_entries(
        field: &Field,
        src: &Path,
        tgt: &Path,
        entries: impl IntoIterator<Item = (Config, Config, FieldElement)>,
    ) -> Result<TwoCell> {
        TwoCell::check_parallel(src, tgt)?;
        let mut rows: BTreeMap<Config, Row> = BTreeMap::new();
        for (c, d, v) in entries {
            if c.len() != src.config_len() || d.len() != tgt.config_len() {
                return Err(Error::DimensionMismatch(format!("entry {c:?} -> {d:?} has the wrong shape")));
            }
            if src.source_labels(&c) != tgt.source_labels(&d) || src.target_labels(&c) != tgt.target_labels(&d) {
                return Err(Error::InvalidInput(format!("entry {c:?} -> {d:?} changes the boundary simples")));
            }
            rows.entry(c).or_default().push((d, v));
        }
        for row in rows.values_mut() {
            merge_row(row);
        }
        rows.retain(|_, r| !r.is_empty());
        Ok(TwoCell { field: field.clone(), src: src.clone(), tgt: tgt.clone(), rows })
    }

    /// Checks that every stored path actually occurs in the source and target composites.
    pub fn validate(&self) -> Result<()> {
        let sc: std::collections::BTreeSet<Config> = self.src.configs().into_iter().collect();
        let tc: std::collections::BTreeSet<Config> = self.tgt.configs().into_iter().collect();
        for (c, row) in &self.rows {
            if !sc.contains(c) {
                return Err(Error::InvalidInput(format!("{c:?} is not a basis path of {:?}", self.src)));
            }
            for (d, _) in row {
                if !tc.contains(d) {
                    return Err(Error::InvalidInput(format!("{d:?} is not a basis path of {:?}", self.tgt)));
                }
            }
        }
        Ok(())
    }

    pub fn identity(field: &Field, path: &Path) -> TwoCell {
        let rows = path.configs().into_iter().map(|c| (c.clone(), vec![(c, field.one())])).collect();
        TwoCell { field: field.clone(), src: path.clone(), tgt: path.clone(), rows }
    }

    pub fn zero(field: &Field, src: &Path, tgt: &Path) -> Result<TwoCell> {
        TwoCell::check_parallel(src, tgt)?;
        Ok(TwoCell { field: field.clone(), src: src.clone(), tgt: tgt.clone(), rows: BTreeMap::new() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn source(&self) -> &Path {
        &self.src
    }

    pub fn target(&self) -> &Path {
        &self.tgt
    }

    /// Image of one source basis path.
    pub fn row(&self, c: &[u32]) -> &[(Config, FieldElement)] {
        self.rows.get(c).map(|r| &r[..]).unwrap_or(&[])
    }

    pub fn entry(&self, c: &[u32], d: &[u32]) -> FieldElement {
        self.row(c).iter().find(|(x, _)| x.as_slice() == d).map(|(_, v)| v.clone()).unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero entries in normal-form order.
    pub fn entries(&self) -> impl Iterator<Item = (&Config, &Config, &FieldElement)> {
        self.rows.iter().flat_map(|(c, row)| row.iter().map(move |(d, v)| (c, d, v)))
    }

    pub fn num_entries(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    /// Same data, relabelled boundary paths (must have identical basis paths).
    pub fn retyped(&self, src: &Path, tgt: &Path) -> TwoCell {
        TwoCell { field: self.field.clone(), src: src.clone(), tgt: tgt.clone(), rows: self.rows.clone() }
    }

    /// Vertical composite: first `self`, then `next`.
    pub fn then(&self, next: &TwoCell) -> Result<TwoCell> {
        if self.tgt != next.src {
            return Err(Error::DimensionMismatch(format!("vertical composition: {:?} ≠ {:?}", self.tgt, next.src)));
        }
        let mut rows = BTreeMap::new();
        for (c, row) in &self.rows {
            let mut out: Row = Vec::new();
            for (d, a) in row {
                for (e, b) in next.row(d) {
                    out.push((e.clone(), a * b));
                }
            }
            merge_row(&mut out);
            if !out.is_empty() {
                rows.insert(c.clone(), out);
            }
        }
        Ok(TwoCell { field: self.field.clone(), src: self.src.clone(), tgt: next.tgt.clone(), rows })
    }

    pub fn add(&self, other: &TwoCell) -> Result<TwoCell> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &TwoCell) -> Result<TwoCell> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &TwoCell, op: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Result<TwoCell> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::DimensionMismatch("adding 2-cells with different boundaries".into()));
        }
        let zero = self.field.zero();
        let mut rows: BTreeMap<Config, Row> = BTreeMap::new();
        for (c, d, v) in self.entries() {
            rows.entry(c.clone()).or_default().push((d.clone(), op(v, &zero)));
        }
        for (c, d, v) in other.entries() {
            rows.entry(c.clone()).or_default().push((d.clone(), op(&zero, v)));
        }
        for row in rows.values_mut() {
            merge_row(row);
        }
        rows.retain(|_, r| !r.is_empty());
        Ok(TwoCell { field: self.field.clone(), src: self.src.clone(), tgt: self.tgt.clone(), rows })
    }

    pub fn scale(&self, s: &FieldElement) -> TwoCell {
        let mut out = self.clone();
        for row in out.rows.values_mut() {
            for (_, v) in row.iter_mut() {
                *v = &*v * s;
            }
            row.retain(|(_, v)| !v.is_zero());
        }
        out.rows.retain(|_, r| !r.is_empty());
        out
    }

    /// Applies `self` inside `host`, replacing layers `k .. k + len(source)` that act on
    /// wires starting at `offset`.  Everything else is whiskered by identities.
    pub fn apply_in(&self, host: &Path, k: usize, offset: usize) -> Result<TwoCell> {
        let n = self.src.len();
        if k + n > host.len() {
            return Err(Error::DimensionMismatch(format!("{:?} does not fit in {host:?} at layer {k}", self.src)));
        }
        let before = host.object_at(k);
        let w = before.wires();
        let sw = self.src.source().wires();
        if offset + sw.len() > w.len() || &w[offset..offset + sw.len()] != sw {
            return Err(Error::DimensionMismatch(format!(
                "{:?} does not start at wire {offset} of {:?} in {host:?}",
                self.src, before
            )));
        }
        let left = TwoObject::from_wires(w[..offset].to_vec());
        let right = TwoObject::from_wires(w[offset + sw.len()..].to_vec());
        let expected = self.src.whiskered(&left, &right);
        if host.slice(k, k + n) != expected {
            return Err(Error::DimensionMismatch(format!(
                "layers {k}.. of {host:?} are not {:?} at wire {offset}",
                self.src
            )));
        }
        let new_host =
            host.slice(0, k).then(&self.tgt.whiskered(&left, &right))?.then(&host.slice(k + n, host.len()))?;
        let (d0, d1) = (host.data_start(k), host.data_start(k + n));
        let ns = self.src.source().len();
        let nt = self.tgt.source().len();
        let mut rows = BTreeMap::new();
        for c in host.configs() {
            let state = host.labels_at(&c, k);
            let mut sub: Config = state[offset..offset + ns].to_vec();
            sub.extend_from_slice(&c[d0..d1]);
            let mut out: Row = Vec::new();
            for (q, v) in self.row(&sub) {
                let mut nc: Config = c[..d0].to_vec();
                nc.extend_from_slice(&q[nt..]);
                nc.extend_from_slice(&c[d1..]);
                out.push((nc, v.clone()));
            }
            if !out.is_empty() {
                rows.insert(c, out);
            }
        }
        Ok(TwoCell { field: self.field.clone(), src: host.clone(), tgt: new_host, rows })
    }

    /// The interchange cell `path ⇒ path.swap(j)`, a permutation of basis paths.
    pub fn interchange(field: &Field, path: &Path, j: usize) -> Result<TwoCell> {
        let swapped = path.swap(j)?;
        let (a0, a1, a2) = (path.data_start(j), path.data_start(j + 1), path.data_start(j + 2));
        let rows = path
            .configs()
            .into_iter()
            .map(|c| {
                let mut d: Config = c[..a0].to_vec();
                d.extend_from_slice(&c[a1..a2]);
                d.extend_from_slice(&c[a0..a1]);
                d.extend_from_slice(&c[a2..]);
                (c, vec![(d, field.one())])
            })
            .collect();
        Ok(TwoCell { field: field.clone(), src: path.clone(), tgt: swapped, rows })
    }

    /// Monoidal whiskering by objects on the left and right.
    pub fn whiskered(&self, left: &TwoObject, right: &TwoObject) -> TwoCell {
        let src = self.src.whiskered(left, right);
        let tgt = self.tgt.whiskered(left, right);
        let ns = self.src.source().len();
        let mut rows = BTreeMap::new();
        let ls = left.simples();
        let rs = right.simples();
        for (c, row) in &self.rows {
            for l in &ls {
                for r in &rs {
                    let wrap = |x: &Config| {
                        let mut y = l.clone();
                        y.extend_from_slice(&x[..ns]);
                        y.extend_from_slice(r);
                        y.extend_from_slice(&x[ns..]);
                        y
                    };
                    rows.insert(wrap(c), row.iter().map(|(d, v)| (wrap(d), v.clone())).collect());
                }
            }
        }
        TwoCell { field: self.field.clone(), src, tgt, rows }
    }

    /// `self ∘ first`: whiskers by a 1-morphism applied before.
    pub fn after_path(&self, first: &Path) -> Result<TwoCell> {
        self.apply_in(&first.then(&self.src)?, first.len(), 0)
    }

    /// `last ∘ self`: whiskers by a 1-morphism applied afterwards.
    pub fn before_path(&self, last: &Path) -> Result<TwoCell> {
        self.apply_in(&self.src.then(last)?, 0, 0)
    }

    /// Horizontal composite of `self: P ⇒ Q` (first) and `next: S ⇒ T` (after): S∘P ⇒ T∘Q.
    pub fn hcompose(&self, next: &TwoCell) -> Result<TwoCell> {
        self.before_path(&next.src)?.then(&next.after_path(&self.tgt)?)
    }

    /// Monoidal product `self □ other`, with `self` applied first in normal form.
    pub fn boxed(&self, other: &TwoCell) -> Result<TwoCell> {
        let a = self.whiskered(&TwoObject::unit(), other.src.source());
        let b_src = other.src.whiskered(self.tgt.target(), &TwoObject::unit());
        let host = a.src.then(&b_src)?;
        let first = a.apply_in(&host, 0, 0)?;
        let second = other.apply_in(first.target(), self.tgt.len(), self.tgt.target().len())?;
        first.then(&second)
    }

    /// Inverse, computed block by block.
    pub fn inverse(&self) -> Result<TwoCell> {
        let mut entries = Vec::new();
        for ((s, t), (src_cfgs, tgt_cfgs)) in self.blocks_index() {
            if src_cfgs.len() != tgt_cfgs.len() {
                return Err(Error::NotInvertible(format!(
                    "block {s:?} -> {t:?} is {}x{}",
                    tgt_cfgs.len(),
                    src_cfgs.len()
                )));
            }
            let m = self.dense_block(&src_cfgs, &tgt_cfgs);
            let inv = m.inverse().map_err(|_| Error::NotInvertible(format!("block {s:?} -> {t:?} is singular")))?;
            for (i, d) in tgt_cfgs.iter().enumerate() {
                for (j, c) in src_cfgs.iter().enumerate() {
                    let v = inv.get(j, i);
                    if !v.is_zero() {
                        entries.push((d.clone(), c.clone(), v.clone()));
                    }
                }
            }
        }
        TwoCell::from_entries(&self.field, &self.tgt, &self.src, entries)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Basis paths of both boundaries grouped by (source simple, target simple).
    fn blocks_index(&self) -> BTreeMap<(Labels, Labels), (Vec<Config>, Vec<Config>)> {
        let mut idx: BTreeMap<(Labels, Labels), (Vec<Config>, Vec<Config>)> = BTreeMap::new();
        for c in self.src.configs() {
            let key = (self.src.source_labels(&c).to_vec(), self.src.target_labels(&c));
            idx.entry(key).or_default().0.push(c);
        }
        for d in self.tgt.configs() {
            let key = (self.tgt.source_labels(&d).to_vec(), self.tgt.target_labels(&d));
            idx.entry(key).or_default().1.push(d);
        }
        idx
    }

    fn dense_block(&self, src_cfgs: &[Config], tgt_cfgs: &[Config]) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(&self.field, tgt_cfgs.len(), src_cfgs.len());
        for (j, c) in src_cfgs.iter().enumerate() {
            for (d, v) in self.row(c) {
                if let Ok(i) = tgt_cfgs.binary_search(d) {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    /// The block between one source simple and one target simple, rows indexed by
    /// target basis paths and columns by source basis paths (normal-form order).
    pub fn block(&self, source_simple: &[u32], target_simple: &[u32]) -> (Vec<Config>, Vec<Config>, ScalarMatrix) {
        let key = (source_simple.to_vec(), target_simple.to_vec());
        let (s, t) = self.blocks_index().remove(&key).unwrap_or_default();
        let m = self.dense_block(&s, &t);
        (s, t, m)
    }

    /// First entry where two parallel cells differ, or `None` when they are equal.
    pub fn difference(&self, other: &TwoCell) -> Option<CellDifference> {
        if self.src != other.src || self.tgt != other.tgt {
            return Some(CellDifference {
                source_simple: Vec::new(),
                target_simple: Vec::new(),
                from: Vec::new(),
                to: Vec::new(),
                left: format!("{:?} => {:?}", self.src, self.tgt),
                right: format!("{:?} => {:?}", other.src, other.tgt),
            });
        }
        let keys: std::collections::BTreeSet<&Config> = self.rows.keys().chain(other.rows.keys()).collect();
        for c in keys {
            let (a, b) = (self.row(c), other.row(c));
            if a == b {
                continue;
            }
            let targets: std::collections::BTreeSet<&Config> = a.iter().chain(b).map(|(d, _)| d).collect();
            for d in targets {
                let (x, y) = (self.entry(c, d), other.entry(c, d));
                if x != y {
                    return Some(CellDifference {
                        source_simple: self.src.source_labels(c).to_vec(),
                        target_simple: self.src.target_labels(c),
                        from: c.clone(),
                        to: d.clone(),
                        left: x.to_string(),
                        right: y.to_string(),
                    });
                }
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.difference(&TwoCell::identity(&self.field, &self.src)).is_none()
    }

    /// Whether all entries vanish.
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

impl PartialEq for TwoCell {
    fn eq(&self, other: &Self) -> bool {
        self.difference(other).is_none()
    }
}
