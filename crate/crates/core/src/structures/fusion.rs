use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::check::check_algebra;
use super::types::{AlgebraObject, Entries};
use crate::ambient::{Config, FiniteGroup, Generator, Path, TwoObject, Wire};
use crate::error::{Error, Result};
use crate::scalars::{Field, FieldElement};

/// Skeletal data of a multifusion category, read as an algebra in 2Vect.
///
/// Labels are indices into `simples`.  `mu` lists associator entries between
/// basis paths of `m(m□1)` and `m(1□m)`: `[a, b, c, α, e, β, d]` for
/// `a⊗b →α e`, `e⊗c →β d`, and `[a, b, c, γ, f, δ, d]` for `b⊗c →γ f`,
/// `a⊗f →δ d`.  Any 1×1 block of μ, λ or ρ without an explicit entry takes the
/// corresponding default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionData {
    pub name: String,
    pub field: Field,
    pub simples: Vec<String>,
    /// group and degree of each simple, for algebras in 2Vect_G
    pub grading: Option<(Arc<FiniteGroup>, Vec<u32>)>,
    /// the simples making up the unit object
    pub unit: Vec<u32>,
    /// `(a, b, c, N_ab^c)` with `N > 0`
    pub fusion: Vec<(u32, u32, u32, u32)>,
    pub mu: Entries,
    pub mu_default: Option<FieldElement>,
    pub lambda: Entries,
    pub rho: Entries,
}

impl FusionData {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn object(&self) -> Result<TwoObject> {
        let wire = match &self.grading {
            None => Wire::new(&self.name, self.rank() as u32),
            Some((g, grades)) => {
                if grades.len() != self.rank() {
                    return Err(Error::Malformed(format!("`{}` needs one degree per simple", self.name)));
                }
                Wire::graded(&self.name, g, grades.clone())?
            }
        };
        Ok(TwoObject::single(wire))
    }

    /// Fusion coefficients as a lookup table.
    pub fn coefficient(&self, a: u32, b: u32, c: u32) -> u32 {
        self.fusion.iter().filter(|t| (t.0, t.1, t.2) == (a, b, c)).map(|t| t.3).sum()
    }
}

/// Builds the algebra without running the axiom checker.
pub fn build_fusion_algebra(data: &FusionData) -> Result<AlgebraObject> {
    let f = &data.field;
    let r = data.rank() as u32;
    let a = data.object()?;
    for &(x, y, z, _) in &data.fusion {
        if x >= r || y >= r || z >= r {
            return Err(Error::Malformed(format!("fusion rule ({x}, {y}, {z}) mentions an unknown simple")));
        }
    }
    if data.unit.iter().any(|&u| u >= r) || (data.unit.is_empty() && r > 0) {
        return Err(Error::Malformed(format!("`{}` has an invalid unit", data.name)));
    }
    let m =
        Generator::new("m", a.boxed(&a), a.clone(), data.fusion.iter().map(|&(x, y, z, n)| (vec![x, y], vec![z], n)))?;
    let i = Generator::new("i", TwoObject::unit(), a.clone(), data.unit.iter().map(|&u| (vec![], vec![u], 1)))?;
    let q = a.len();
    let a3 = a.boxed(&a).boxed(&a);
    let m_m1 = Path::from_layers(&a3, &[(m.clone(), 0), (m.clone(), 0)])?;
    let m_1m = Path::from_layers(&a3, &[(m.clone(), q), (m.clone(), 0)])?;
    let id = Path::identity(&a);
    let one = f.one();
    let mu = fill_defaults(&m_m1, &m_1m, &data.mu, data.mu_default.as_ref())?;
    let m_i1 = Path::from_layers(&a, &[(i.clone(), 0), (m.clone(), 0)])?;
    let m_1i = Path::from_layers(&a, &[(i.clone(), q), (m.clone(), 0)])?;
    let lambda = fill_defaults(&m_i1, &id, &data.lambda, Some(&one))?;
    let rho = fill_defaults(&m_1i, &id, &data.rho, Some(&one))?;
    AlgebraObject::from_entries(&data.name, f, m, i, lambda, mu, rho)
}

/// Loads fusion data as an algebra and checks every algebra axiom.
pub fn load_fusion_algebra(data: &FusionData) -> Result<AlgebraObject> {
    let alg = build_fusion_algebra(data)?;
    let report = check_algebra(&alg);
    if let Some(c) = report.failures().next() {
        return Err(Error::AxiomViolation { equation: c.name.clone(), detail: c.detail.clone().unwrap_or_default() });
    }
    Ok(alg)
}

/// Adds `default` on every 1×1 block that has no explicit entry.
pub(crate) fn fill_defaults(
    src: &Path,
    tgt: &Path,
    explicit: &Entries,
    default: Option<&FieldElement>,
) -> Result<Entries> {
    let mut out = explicit.clone();
    let Some(v) = default else { return Ok(out) };
    let touched: BTreeSet<(Config, Config)> = explicit
        .iter()
        .map(|(s, _, _)| (src.source_labels(s).to_vec(), src.target_labels(s)))
        .chain(explicit.iter().map(|(_, t, _)| (tgt.source_labels(t).to_vec(), tgt.target_labels(t))))
        .collect();
    let mut blocks: BTreeMap<(Config, Config), (Vec<Config>, Vec<Config>)> = BTreeMap::new();
    for c in src.configs() {
        blocks.entry((src.source_labels(&c).to_vec(), src.target_labels(&c))).or_default().0.push(c);
    }
    for c in tgt.configs() {
        blocks.entry((tgt.source_labels(&c).to_vec(), tgt.target_labels(&c))).or_default().1.push(c);
    }
    for (key, (s, t)) in blocks {
        if s.len() == 1 && t.len() == 1 && !touched.contains(&key) {
            out.push((s[0].clone(), t[0].clone(), v.clone()));
        }
    }
    Ok(out)
}
