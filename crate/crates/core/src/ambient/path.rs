use std::fmt;

use super::generator::Gen;
use super::object::{Labels, TwoObject};
use crate::error::{Error, Result};

/// One basis path through a composite: the source labels followed, for every
/// layer, by the multiplicity index and the layer's output labels.
pub type Config = Vec<u32>;

/// A generator applied to the wires `offset .. offset + source.len()`.
#[derive(Clone)]
pub struct Layer {
    pub gen: Gen,
    pub offset: usize,
}

impl PartialEq for Layer {
    fn eq(&self, other: &Self) -> bool {
        self.offset == other.offset && self.gen.id() == other.gen.id()
    }
}
impl Eq for Layer {}

/// A composite 1-morphism in normal form: generators applied bottom to top,
/// each on a contiguous window of wires.  Composition is concatenation, so
/// it is strictly associative and unital.
#[derive(Clone)]
pub struct Path {
    src: TwoObject,
    layers: Vec<Layer>,
    /// wire list after each layer (index 0 = source)
    objects: Vec<TwoObject>,
    /// start of each layer's data inside a config
    starts: Vec<usize>,
}

impl PartialEq for Path {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.layers == other.layers
    }
}
impl Eq for Path {}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "Id({:?})", self.src);
        }
        let parts: Vec<String> = self.layers.iter().map(|l| format!("{}@{}", l.gen.name(), l.offset)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Path {
    pub fn identity(obj: &TwoObject) -> Path {
        Path { src: obj.clone(), layers: Vec::new(), objects: vec![obj.clone()], starts: Vec::new() }
    }

    pub fn generator(gen: &Gen) -> Path {
        Path::identity(gen.source()).push(gen, 0).expect("generator fits its own source")
    }

    pub fn from_layers(src: &TwoObject, layers: &[(Gen, usize)]) -> Result<Path> {
        let mut p = Path::identity(src);
        for (g, o) in layers {
            p = p.push(g, *o)?;
        }
        Ok(p)
    }

    /// Applies `gen` on top, to the wires starting at `offset`.
    pub fn push(&self, gen: &Gen, offset: usize) -> Result<Path> {
        let cur = self.target();
        let w = cur.wires();
        let s = gen.source().wires();
        if offset + s.len() > w.len() || &w[offset..offset + s.len()] != s {
            return Err(Error::DimensionMismatch(format!(
                "`{}` expects {:?} at wire {offset} of {:?}",
                gen.name(),
                gen.source(),
                cur
            )));
        }
        let mut wires = w[..offset].to_vec();
        wires.extend(gen.target().wires().iter().cloned());
        wires.extend(w[offset + s.len()..].iter().cloned());
        let mut p = self.clone();
        p.starts.push(self.config_len());
        p.layers.push(Layer { gen: gen.clone(), offset });
        p.objects.push(TwoObject::from_wires(wires));
        Ok(p)
    }

    /// `other ∘ self`: first self, then other.
    pub fn then(&self, other: &Path) -> Result<Path> {
        if other.src != *self.target() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {:?} after {:?}: {:?} ≠ {:?}",
                other,
                self,
                other.src,
                self.target()
            )));
        }
        let mut p = self.clone();
        for l in &other.layers {
            p = p.push(&l.gen, l.offset)?;
        }
        Ok(p)
    }

    /// The same composite with extra wires on either side (monoidal whiskering).
    pub fn whiskered(&self, left: &TwoObject, right: &TwoObject) -> Path {
        let src = left.boxed(&self.src).boxed(right);
        let mut p = Path::identity(&src);
        for l in &self.layers {
            p = p.push(&l.gen, l.offset + left.len()).expect("whiskering preserves fit");
        }
        p
    }

    pub fn source(&self) -> &TwoObject {
        &self.src
    }

    pub fn target(&self) -> &TwoObject {
        self.objects.last().unwrap()
    }

    /// Wire list just before layer `k` (`k = len` gives the target).
    pub fn object_at(&self, k: usize) -> &TwoObject {
        &self.objects[k]
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Sub-path consisting of layers `from..to`.
    pub fn slice(&self, from: usize, to: usize) -> Path {
        let mut p = Path::identity(&self.objects[from]);
        for l in &self.layers[from..to] {
            p = p.push(&l.gen, l.offset).expect("slice of a valid path");
        }
        p
    }

    pub fn config_len(&self) -> usize {
        match self.layers.last() {
            None => self.src.len(),
            Some(l) => self.starts.last().unwrap() + 1 + l.gen.target().len(),
        }
    }

    /// Index in a config where layer `k`'s data starts (`k = len` gives the length).
    pub fn data_start(&self, k: usize) -> usize {
        if k == self.layers.len() {
            self.config_len()
        } else {
            self.starts[k]
        }
    }

    /// Labels on the wires just before layer `k`.
    pub fn labels_at(&self, config: &[u32], k: usize) -> Labels {
        let mut state: Labels = config[..self.src.len()].to_vec();
        for (j, l) in self.layers[..k].iter().enumerate() {
            let st = self.starts[j];
            let n_in = l.gen.source().len();
            let outs = &config[st + 1..st + 1 + l.gen.target().len()];
            state.splice(l.offset..l.offset + n_in, outs.iter().copied());
        }
        state
    }

    pub fn source_labels<'a>(&self, config: &'a [u32]) -> &'a [u32] {
        &config[..self.src.len()]
    }

    pub fn target_labels(&self, config: &[u32]) -> Labels {
        self.labels_at(config, self.layers.len())
    }

    /// All basis paths starting at the given source simple, in normal-form order.
    pub fn configs_from(&self, labels: &[u32]) -> Vec<Config> {
        let mut out = Vec::new();
        let mut cfg: Config = labels.to_vec();
        self.extend(0, labels.to_vec(), &mut cfg, &mut out);
        out
    }

    fn extend(&self, k: usize, state: Labels, cfg: &mut Config, out: &mut Vec<Config>) {
        if k == self.layers.len() {
            out.push(cfg.clone());
            return;
        }
        let l = &self.layers[k];
        let n_in = l.gen.source().len();
        let input = &state[l.offset..l.offset + n_in];
        for (o, m) in l.gen.outputs(input) {
            let mut next = state[..l.offset].to_vec();
            next.extend_from_slice(o);
            next.extend_from_slice(&state[l.offset + n_in..]);
            for mu in 0..*m {
                let before = cfg.len();
                cfg.push(mu);
                cfg.extend_from_slice(o);
                self.extend(k + 1, next.clone(), cfg, out);
                cfg.truncate(before);
            }
        }
    }

    /// Every basis path, grouped by source simple in row-major order.
    pub fn configs(&self) -> Vec<Config> {
        self.src.simples().iter().flat_map(|s| self.configs_from(s)).collect()
    }

    /// Skeletal dims matrix: number of basis paths from each source simple to each target simple.
    pub fn dims(&self) -> Vec<Vec<u32>> {
        let tgt = self.target();
        let mut d = vec![vec![0u32; self.src.rank()]; tgt.rank()];
        for (j, s) in self.src.simples().iter().enumerate() {
            for c in self.configs_from(s) {
                d[tgt.flat_index(&self.target_labels(&c))][j] += 1;
            }
        }
        d
    }

    /// Whether layers `j` and `j + 1` act on disjoint wires and can be exchanged.
    pub fn can_swap(&self, j: usize) -> bool {
        self.swapped_layers(j).is_some()
    }

    fn swapped_layers(&self, j: usize) -> Option<(Layer, Layer)> {
        let (a, b) = (self.layers.get(j)?, self.layers.get(j + 1)?);
        let (a_in, a_out) = (a.gen.source().len(), a.gen.target().len());
        let (b_in, b_out) = (b.gen.source().len(), b.gen.target().len());
        if b.offset >= a.offset + a_out {
            // b sits to the right of a's output
            let nb = Layer { gen: b.gen.clone(), offset: b.offset + a_in - a_out };
            Some((nb, a.clone()))
        } else if b.offset + b_in <= a.offset {
            let na = Layer { gen: a.gen.clone(), offset: a.offset + b_out - b_in };
            Some((b.clone(), na))
        } else {
            None
        }
    }

    /// The path with layers `j` and `j + 1` exchanged (interchange law).
    pub fn swap(&self, j: usize) -> Result<Path> {
        let (x, y) = self
            .swapped_layers(j)
            .ok_or_else(|| Error::InvalidInput(format!("layers {j} and {} of {self:?} overlap", j + 1)))?;
        let mut p = self.slice(0, j);
        p = p.push(&x.gen, x.offset)?.push(&y.gen, y.offset)?;
        p.then(&self.slice(j + 2, self.len()))
    }
}
