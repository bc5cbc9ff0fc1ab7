use std::collections::BTreeMap;
use std::sync::Arc;

use super::{ActionDecl, Document, EntryDecl, RuleDecl, IDENTITY_PREFIX, REGULAR_PREFIX};
use crate::ambient::{Ambient, Gen, Generator, Path, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::scalars::{parse_scalar, Field, FieldElement, FieldSpec};
use crate::structures::{
    build_fusion_algebra, fill_defaults, AlgebraObject, Balanced1Morphism, Bimodule, Entries, FusionData, LeftModule,
    RightModule,
};

/// The actions declared on one carrier.
#[derive(Clone, Debug)]
pub struct ModulePair {
    pub right: Option<RightModule>,
    pub left: Option<LeftModule>,
}

/// A document evaluated over a working field and ambient.  Algebras are
/// built without running their axiom checks, so malformed data can still be
/// inspected by the checkers.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub ambient: Ambient,
    fusion: BTreeMap<String, FusionData>,
    algebras: BTreeMap<String, Arc<AlgebraObject>>,
    modules: BTreeMap<String, ModulePair>,
    bimodules: BTreeMap<String, Bimodule>,
    balanced: BTreeMap<String, Balanced1Morphism>,
}

fn scalar(field: &Field, text: &str) -> Result<FieldElement> {
    parse_scalar(field, text).map_err(|e| Error::InvalidInput(format!("scalar `{text}`: {e}")))
}

fn entries(field: &Field, es: &[EntryDecl]) -> Result<Entries> {
    es.iter().map(|e| Ok((e.src.clone(), e.tgt.clone(), scalar(field, &e.value)?))).collect()
}

fn default(field: &Field, text: &Option<String>) -> Result<Option<FieldElement>> {
    text.as_deref().map(|t| scalar(field, t)).transpose()
}

fn rules(rs: &[RuleDecl]) -> Vec<(Vec<u32>, Vec<u32>, u32)> {
    rs.iter().map(|r| (r.src.clone(), r.tgt.clone(), r.mult)).collect()
}

fn cell(field: &Field, src: &Path, tgt: &Path, es: &[EntryDecl], dflt: &Option<String>) -> Result<TwoCell> {
    let filled = fill_defaults(src, tgt, &entries(field, es)?, default(field, dflt)?.as_ref())?;
    TwoCell::from_entries(field, src, tgt, filled)
}

fn layers(obj: &TwoObject, ls: &[(&Gen, usize)]) -> Result<Path> {
    let owned: Vec<(Gen, usize)> = ls.iter().map(|(g, o)| ((*g).clone(), *o)).collect();
    Path::from_layers(obj, &owned)
}

/// Rejects a change of conductor when some literal mentions `z`, whose
/// meaning depends on the conductor.
fn check_conductor(doc: &Document, spec: FieldSpec) -> Result<()> {
    if spec == doc.field {
        return Ok(());
    }
    match doc.literals().into_iter().find(|(_, t)| t.contains(['z', 'Z'])) {
        Some((place, _)) => Err(Error::InvalidInput(format!(
            "conductor mismatch: {place} uses z, declared under {} but evaluated under {spec}",
            doc.field
        ))),
        None => Ok(()),
    }
}

fn right_module(name: &str, alg: &Arc<AlgebraObject>, carrier: &TwoObject, d: &ActionDecl) -> Result<RightModule> {
    let f = &alg.field;
    let n = Generator::new("n", carrier.boxed(&alg.a), carrier.clone(), rules(&d.action))?;
    let p = carrier.len();
    let maa = carrier.boxed(&alg.power(2));
    let nu =
        cell(f, &layers(&maa, &[(&n, 0), (&n, 0)])?, &layers(&maa, &[(&alg.m, p), (&n, 0)])?, &d.assoc, &d.default)?;
    let rho = cell(f, &layers(carrier, &[(&alg.i, p), (&n, 0)])?, &Path::identity(carrier), &d.unit, &d.default)?;
    RightModule::new(name, alg, n, nu, rho)
}

fn left_module(name: &str, alg: &Arc<AlgebraObject>, carrier: &TwoObject, d: &ActionDecl) -> Result<LeftModule> {
    let f = &alg.field;
    let l = Generator::new("l", alg.a.boxed(carrier), carrier.clone(), rules(&d.action))?;
    let q = alg.len();
    let aam = alg.power(2).boxed(carrier);
    let kappa =
        cell(f, &layers(&aam, &[(&alg.m, 0), (&l, 0)])?, &layers(&aam, &[(&l, q), (&l, 0)])?, &d.assoc, &d.default)?;
    let lambda = cell(f, &layers(carrier, &[(&alg.i, 0), (&l, 0)])?, &Path::identity(carrier), &d.unit, &d.default)?;
    LeftModule::new(name, alg, l, kappa, lambda)
}

impl Workspace {
    /// Evaluates `doc`, optionally over another field or ambient.
    pub fn build(doc: &Document, field: Option<FieldSpec>, ambient: Option<&str>) -> Result<Workspace> {
        let spec = field.unwrap_or(doc.field);
        check_conductor(doc, spec)?;
        let f = Field::new(spec);
        let amb = Ambient::parse(ambient.unwrap_or(&doc.ambient), spec)?;
        let wire = |name: &str, rank: u32, degrees: &Option<Vec<u32>>| -> Result<TwoObject> {
            Ok(TwoObject::single(amb.wire(name, rank, degrees.clone())?))
        };
        let mut ws = Workspace {
            field: f.clone(),
            ambient: amb.clone(),
            fusion: BTreeMap::new(),
            algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            balanced: BTreeMap::new(),
        };
        for a in &doc.algebras {
            let grading = match (amb.group(), &a.degrees) {
                (None, None) => None,
                (Some(g), Some(d)) => Some((g.clone(), d.clone())),
                (None, Some(_)) => {
                    return Err(Error::Grading(format!("algebra `{}` is graded but the ambient is 2Vect", a.name)))
                }
                (Some(_), None) => {
                    return Err(Error::Grading(format!("algebra `{}` needs degrees in {}", a.name, amb.name())))
                }
            };
            let data = FusionData {
                name: a.name.clone(),
                field: f.clone(),
                simples: a.simples.clone(),
                grading,
                unit: a.unit.clone(),
                fusion: a.fusion.iter().map(|t| (t[0], t[1], t[2], t[3])).collect(),
                mu: entries(&f, &a.mu)?,
                mu_default: default(&f, &a.mu_default)?,
                lambda: entries(&f, &a.lambda)?,
                rho: entries(&f, &a.rho)?,
            };
            let alg = build_fusion_algebra(&data)?;
            ws.algebras.insert(a.name.clone(), Arc::new(alg));
            ws.fusion.insert(a.name.clone(), data);
        }
        for m in &doc.modules {
            let alg = ws.algebra(&m.algebra)?;
            let carrier = wire(&m.name, m.rank, &m.degrees)?;
            let right = m.right.as_ref().map(|d| right_module(&m.name, &alg, &carrier, d)).transpose()?;
            let left = m.left.as_ref().map(|d| left_module(&m.name, &alg, &carrier, d)).transpose()?;
            ws.modules.insert(m.name.clone(), ModulePair { right, left });
        }
        for b in &doc.bimodules {
            let carrier = wire(&b.name, b.rank, &b.degrees)?;
            let left = left_module(&b.name, &ws.algebra(&b.left_algebra)?, &carrier, &b.left)?;
            let right = right_module(&b.name, &ws.algebra(&b.right_algebra)?, &carrier, &b.right)?;
            let shell = Bimodule::from_entries(&b.name, left.clone(), right.clone(), Vec::new())?;
            let beta = cell(&f, &shell.n_l1()?, &shell.l_1n()?, &b.beta, &b.beta_default)?;
            ws.bimodules.insert(b.name.clone(), Bimodule::new(&b.name, left, right, beta)?);
        }
        for b in &doc.balanced {
            let right = ws.right_module(&b.right)?;
            let left = ws.left_module(&b.left)?;
            let target = wire(&b.name, b.rank, &b.degrees)?;
            let map = Generator::new("f", right.carrier.boxed(&left.carrier), target, rules(&b.map))?;
            let middle = right.carrier.boxed(&right.algebra.a).boxed(&left.carrier);
            let src = layers(&middle, &[(&right.n, 0), (&map, 0)])?;
            let tgt = layers(&middle, &[(&left.l, right.len()), (&map, 0)])?;
            let beta = cell(&f, &src, &tgt, &b.beta, &b.beta_default)?;
            ws.balanced.insert(b.name.clone(), Balanced1Morphism::new(right, left, map, beta)?);
        }
        Ok(ws)
    }

    pub fn algebra(&self, name: &str) -> Result<Arc<AlgebraObject>> {
        self.algebras.get(name).cloned().ok_or_else(|| Error::Unresolved(name.into()))
    }

    /// The fusion data an algebra was built from.
    pub fn fusion_data(&self, name: &str) -> Result<&FusionData> {
        self.fusion.get(name).ok_or_else(|| Error::Unresolved(name.into()))
    }

    /// A declared module, or both regular modules for `regular:A`.
    pub fn module(&self, name: &str) -> Result<ModulePair> {
        if let Some(a) = name.strip_prefix(REGULAR_PREFIX) {
            let alg = self.algebra(a)?;
            return Ok(ModulePair { right: Some(RightModule::regular(&alg)), left: Some(LeftModule::regular(&alg)) });
        }
        self.modules.get(name).cloned().ok_or_else(|| Error::Unresolved(name.into()))
    }

    pub fn right_module(&self, name: &str) -> Result<RightModule> {
        self.module(name)?.right.ok_or_else(|| Error::InvalidInput(format!("module `{name}` has no right action")))
    }

    pub fn left_module(&self, name: &str) -> Result<LeftModule> {
        self.module(name)?.left.ok_or_else(|| Error::InvalidInput(format!("module `{name}` has no left action")))
    }

    /// A declared bimodule, or the identity bimodule for `id:A`.
    pub fn bimodule(&self, name: &str) -> Result<Bimodule> {
        if let Some(a) = name.strip_prefix(IDENTITY_PREFIX) {
            return Ok(Bimodule::identity(&self.algebra(a)?));
        }
        self.bimodules.get(name).cloned().ok_or_else(|| Error::Unresolved(name.into()))
    }

    pub fn balanced(&self, name: &str) -> Result<Balanced1Morphism> {
        self.balanced.get(name).cloned().ok_or_else(|| Error::Unresolved(name.into()))
    }
}
