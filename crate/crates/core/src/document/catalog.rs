//! The built-in examples written out as documents, and catalogs of documents
//! loaded from a directory.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path as FsPath;
use std::sync::Arc;

use super::{ActionDecl, AlgebraDecl, BalancedDecl, BimoduleDecl, Document, EntryDecl, ModuleDecl, RuleDecl};
use crate::ambient::{Config, Gen, TwoCell, TwoObject};
use crate::error::{Error, Result};
use crate::scalars::{Field, FieldSpec};
use crate::structures::{catalog, load_fusion_algebra, AlgebraObject, Bimodule, FusionData, LeftModule, RightModule};

fn entry_decls(es: &[(Config, Config, crate::FieldElement)]) -> Vec<EntryDecl> {
    es.iter().map(|(s, t, v)| EntryDecl { src: s.clone(), tgt: t.clone(), value: v.to_string() }).collect()
}

fn rule_decls(g: &Gen) -> Vec<RuleDecl> {
    g.entries().map(|(i, o, k)| RuleDecl { src: i.clone(), tgt: o.clone(), mult: k }).collect()
}

/// The `(source, target)` pairs that form a 1×1 block of `cell`.
fn singletons(cell: &TwoCell) -> BTreeSet<(Config, Config)> {
    let (src, tgt) = (cell.source(), cell.target());
    let mut blocks: BTreeMap<(Config, Vec<u32>), (Vec<Config>, Vec<Config>)> = BTreeMap::new();
    for c in src.configs() {
        blocks.entry((src.source_labels(&c).to_vec(), src.target_labels(&c))).or_default().0.push(c);
    }
    for c in tgt.configs() {
        blocks.entry((tgt.source_labels(&c).to_vec(), tgt.target_labels(&c))).or_default().1.push(c);
    }
    blocks
        .into_values()
        .filter(|(s, t)| s.len() == 1 && t.len() == 1)
        .map(|(mut s, mut t)| (s.remove(0), t.remove(0)))
        .collect()
}

/// Whether every 1×1 block of `cell` holds exactly 1, so a default of 1 can
/// stand in for those entries.
fn unit_blocks(cell: &TwoCell) -> bool {
    let values: BTreeMap<(&Config, &Config), _> = cell.entries().map(|(s, t, v)| ((s, t), v)).collect();
    singletons(cell).iter().all(|(s, t)| values.get(&(s, t)).is_some_and(|v| v.is_one()))
}

/// Entries of `cell` that a default of 1 does not already supply.
fn explicit(cell: &TwoCell, with_default: bool) -> Vec<EntryDecl> {
    let single = if with_default { singletons(cell) } else { BTreeSet::new() };
    cell.entries()
        .filter(|(c, d, _)| !single.contains(&((*c).clone(), (*d).clone())))
        .map(|(c, d, v)| EntryDecl { src: c.clone(), tgt: d.clone(), value: v.to_string() })
        .collect()
}

/// Rank and degrees of a one-wire carrier.
fn carrier_shape(obj: &TwoObject) -> (u32, Option<Vec<u32>>) {
    let w = &obj.wires()[0];
    assert_eq!(obj.wires().len(), 1, "documents describe one-wire carriers");
    (w.rank(), w.grades().map(<[u32]>::to_vec))
}

fn action_decl(g: &Gen, assoc: &TwoCell, unit: &TwoCell) -> ActionDecl {
    let dflt = unit_blocks(assoc) && unit_blocks(unit);
    ActionDecl {
        action: rule_decls(g),
        assoc: explicit(assoc, dflt),
        unit: explicit(unit, dflt),
        default: dflt.then(|| "1".to_string()),
    }
}

/// The declaration reproducing `data` exactly.
pub(crate) fn algebra_decl(data: &FusionData) -> AlgebraDecl {
    AlgebraDecl {
        name: data.name.clone(),
        simples: data.simples.clone(),
        degrees: data.grading.as_ref().map(|(_, d)| d.clone()),
        unit: data.unit.clone(),
        fusion: data.fusion.iter().map(|&(a, b, c, n)| [a, b, c, n]).collect(),
        mu: entry_decls(&data.mu),
        mu_default: data.mu_default.as_ref().map(ToString::to_string),
        lambda: entry_decls(&data.lambda),
        rho: entry_decls(&data.rho),
    }
}

pub(crate) fn module_decl(name: &str, right: Option<&RightModule>, left: Option<&LeftModule>) -> ModuleDecl {
    let carrier = right.map(|r| &r.carrier).or(left.map(|l| &l.carrier)).expect("a module with an action");
    let algebra = right.map(|r| &r.algebra).or(left.map(|l| &l.algebra)).expect("a module with an action");
    let (rank, degrees) = carrier_shape(carrier);
    ModuleDecl {
        name: name.into(),
        algebra: algebra.name.clone(),
        rank,
        degrees,
        right: right.map(|r| action_decl(&r.n, &r.nu, &r.rho)),
        left: left.map(|l| action_decl(&l.l, &l.kappa, &l.lambda)),
    }
}

pub(crate) fn bimodule_decl(name: &str, b: &Bimodule) -> BimoduleDecl {
    let (rank, degrees) = carrier_shape(b.carrier());
    let dflt = unit_blocks(&b.beta);
    BimoduleDecl {
        name: name.into(),
        left_algebra: b.left.algebra.name.clone(),
        right_algebra: b.right.algebra.name.clone(),
        rank,
        degrees,
        left: action_decl(&b.left.l, &b.left.kappa, &b.left.lambda),
        right: action_decl(&b.right.n, &b.right.nu, &b.right.rho),
        beta: explicit(&b.beta, dflt),
        beta_default: dflt.then(|| "1".to_string()),
    }
}

fn document(field: FieldSpec, ambient: &str, algebras: Vec<AlgebraDecl>) -> Document {
    Document {
        field,
        ambient: ambient.into(),
        algebras,
        modules: Vec::new(),
        bimodules: Vec::new(),
        balanced: Vec::new(),
    }
}

fn load(data: &FusionData) -> Arc<AlgebraObject> {
    Arc::new(load_fusion_algebra(data).expect("catalog algebras pass their axioms"))
}

/// A pointed algebra with the trivial module Vec, the module of `k[G]`
/// modules, and the pairing of Vec with itself.
fn pointed_document(data: FusionData) -> Document {
    let alg = load(&data);
    let mut doc = document(data.field.spec(), "2vect", vec![algebra_decl(&data)]);
    let vr = catalog::vec_right_module(&alg).expect("Vec is a right module");
    let vl = catalog::vec_left_module(&alg).expect("Vec is a left module");
    doc.modules.push(module_decl("VecModule", Some(&vr), Some(&vl)));
    let gr = catalog::group_algebra_right_module(&alg).expect("k[G] is an internal algebra");
    let gl = catalog::group_algebra_left_module(&alg).expect("k[G] is an internal algebra");
    doc.modules.push(module_decl("GroupAlgebraModule", Some(&gr), Some(&gl)));
    doc.balanced.push(BalancedDecl {
        name: "VecPairing".into(),
        right: "VecModule".into(),
        left: "VecModule".into(),
        rank: 1,
        degrees: None,
        map: vec![RuleDecl { src: vec![0, 0], tgt: vec![0], mult: 1 }],
        beta: Vec::new(),
        beta_default: Some("1".into()),
    });
    doc
}

fn plain_document(data: FusionData) -> Document {
    document(data.field.spec(), "2vect", vec![algebra_decl(&data)])
}

fn graded_document(mut data: FusionData, name: &str) -> Document {
    data.name = name.into();
    let group = data.grading.as_ref().expect("a graded example").0.name().to_string();
    document(data.field.spec(), &format!("2vectg:{group}"), vec![algebra_decl(&data)])
}

fn matrices_document() -> Document {
    let q = Field::rationals();
    let (vd, md) = (catalog::vec(&q), catalog::mat2(&q));
    let (v, m) = (load(&vd), load(&md));
    let mut doc = document(q.spec(), "2vect", vec![algebra_decl(&vd), algebra_decl(&md)]);
    let col = catalog::column_bimodule(&m, &v).expect("column vectors");
    let row = catalog::row_bimodule(&v, &m).expect("row vectors");
    doc.bimodules.push(bimodule_decl("Column", &col));
    doc.bimodules.push(bimodule_decl("Row", &row));
    doc
}

/// Every built-in example as a named document.
pub fn builtin_documents() -> Vec<(String, Document)> {
    let q = Field::rationals();
    vec![
        ("vec".to_string(), plain_document(catalog::vec(&q))),
        ("vec_z2".to_string(), pointed_document(catalog::vec_z2(&q))),
        ("vec_z2_omega".to_string(), plain_document(catalog::vec_z2_omega(&Field::cyclotomic(4)))),
        ("vec_z3".to_string(), pointed_document(catalog::vec_z3(&Field::cyclotomic(3)))),
        ("vec_z2xz2".to_string(), pointed_document(catalog::vec_z2xz2(&q))),
        ("fibonacci".to_string(), plain_document(catalog::fibonacci())),
        ("vec_x_vec".to_string(), plain_document(catalog::vec_x_vec(&q))),
        ("matrices".to_string(), matrices_document()),
        ("graded_z2".to_string(), graded_document(catalog::vec_z2_graded(&q), "VectZ2")),
        ("graded_z3".to_string(), graded_document(catalog::vec_z3_graded(&q), "VectZ3")),
    ]
}

/// Named documents searched in order.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub documents: Vec<(String, Document)>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog { documents: builtin_documents() }
    }

    /// Every `*.json` file of `dir`, named by file stem, in file-name order.
    pub fn from_dir(dir: &FsPath) -> Result<Catalog> {
        let read_err = |e: std::io::Error| Error::InvalidInput(format!("cannot read catalog {}: {e}", dir.display()));
        let mut files: Vec<_> = std::fs::read_dir(dir)
            .map_err(read_err)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        let mut documents = Vec::new();
        for path in files {
            let text = std::fs::read_to_string(&path).map_err(read_err)?;
            let doc = Document::parse(&text).map_err(|e| match e {
                Error::Parse { line, col, msg } => {
                    Error::Parse { line, col, msg: format!("{}: {msg}", path.display()) }
                }
                other => Error::InvalidInput(format!("{}: {other}", path.display())),
            })?;
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            documents.push((stem, doc));
        }
        Ok(Catalog { documents })
    }

    pub fn get(&self, name: &str) -> Option<&Document> {
        self.documents.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    /// The first document defining every name in `names`.
    pub fn find(&self, names: &[&str]) -> Option<&(String, Document)> {
        self.documents.iter().find(|(_, d)| names.iter().all(|n| d.defines(n)))
    }
}
