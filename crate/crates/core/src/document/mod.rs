//! JSON documents declaring algebras, modules, bimodules and balanced
//! 1-morphisms over one field and one ambient.
//!
//! Every structure 2-cell is written block by block as explicit
//! `{src, tgt, value}` entries keyed by basis-path configurations; scalar
//! values use the literal grammar of [`crate::scalars::parse_scalar`].  A
//! `default` literal fills every 1×1 block that has no explicit entry.

mod build;
mod catalog;
mod print;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::scalars::{parse_scalar, Field, FieldSpec};

pub use build::{ModulePair, Workspace};
pub use catalog::{builtin_documents, Catalog};

/// One coefficient of a structure 2-cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDecl {
    pub src: Vec<u32>,
    pub tgt: Vec<u32>,
    pub value: String,
}

/// One multiplicity of a 1-morphism between simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleDecl {
    pub src: Vec<u32>,
    pub tgt: Vec<u32>,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDecl {
    pub name: String,
    pub simples: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    pub unit: Vec<u32>,
    /// `[a, b, c, N_ab^c]`
    pub fusion: Vec<[u32; 4]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mu: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_default: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rho: Vec<EntryDecl>,
}

/// An action with its associativity and unit cells.  For a right action the
/// rules read `[module, algebra] -> [module]`; for a left action
/// `[algebra, module] -> [module]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDecl {
    pub action: Vec<RuleDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assoc: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unit: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<String>,
}

/// A carrier with a right action, a left action, or both (independently).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub name: String,
    pub algebra: String,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<ActionDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<ActionDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDecl {
    pub name: String,
    pub left_algebra: String,
    pub right_algebra: String,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    pub left: ActionDecl,
    pub right: ActionDecl,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub beta: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_default: Option<String>,
}

/// `f: M□N → T` with its balancing cell; `right` and `left` name modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BalancedDecl {
    pub name: String,
    pub right: String,
    pub left: String,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    /// rules `[m, n] -> [t]`
    pub map: Vec<RuleDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub beta: Vec<EntryDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_default: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(with = "spec_text")]
    pub field: FieldSpec,
    pub ambient: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<AlgebraDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bimodules: Vec<BimoduleDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub balanced: Vec<BalancedDecl>,
}

mod spec_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalars::FieldSpec;

    pub fn serialize<S: Serializer>(spec: &FieldSpec, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(spec)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FieldSpec, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Prefix naming the right and left regular module of an algebra.
pub const REGULAR_PREFIX: &str = "regular:";
/// Prefix naming the identity bimodule of an algebra.
pub const IDENTITY_PREFIX: &str = "id:";

impl Document {
    /// Parses and validates a document.  Syntax errors carry the line and column.
    pub fn parse(text: &str) -> Result<Document> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: strip_position(&e.to_string()),
        })?;
        doc.validate()?;
        Ok(doc)
    }

    /// Canonical text: two-space indentation, flat records on one line.
    pub fn print(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        let mut out = String::new();
        print::write_value(&mut out, &value, 0);
        out.push('\n');
        out
    }

    /// Every declared entity name, in declaration order.
    pub fn names(&self) -> Vec<&str> {
        self.algebras
            .iter()
            .map(|a| a.name.as_str())
            .chain(self.modules.iter().map(|m| m.name.as_str()))
            .chain(self.bimodules.iter().map(|b| b.name.as_str()))
            .chain(self.balanced.iter().map(|b| b.name.as_str()))
            .collect()
    }

    /// Whether `name` is declared here, directly or as `regular:A` / `id:A`.
    pub fn defines(&self, name: &str) -> bool {
        let base = name.strip_prefix(REGULAR_PREFIX).or_else(|| name.strip_prefix(IDENTITY_PREFIX));
        match base {
            Some(a) => self.algebras.iter().any(|d| d.name == a),
            None => self.names().contains(&name),
        }
    }

    /// Checks unique names, resolvable references and that every literal
    /// parses under the declared field.
    pub fn validate(&self) -> Result<()> {
        Ambient::parse(&self.ambient, self.field)?;
        let mut seen = BTreeSet::new();
        for n in self.names() {
            if n.is_empty() || n.contains(':') {
                return Err(Error::InvalidInput(format!("entity name `{n}` must be non-empty and free of `:`")));
            }
            if !seen.insert(n) {
                return Err(Error::InvalidInput(format!("entity `{n}` is declared twice")));
            }
        }
        let algebras: BTreeSet<&str> = self.algebras.iter().map(|a| a.name.as_str()).collect();
        let need_algebra = |owner: &str, r: &str| {
            if algebras.contains(r) {
                Ok(())
            } else {
                Err(Error::Unresolved(format!("{r}` in `{owner}")))
            }
        };
        for m in &self.modules {
            need_algebra(&m.name, &m.algebra)?;
            if m.right.is_none() && m.left.is_none() {
                return Err(Error::InvalidInput(format!("module `{}` declares no action", m.name)));
            }
        }
        for b in &self.bimodules {
            need_algebra(&b.name, &b.left_algebra)?;
            need_algebra(&b.name, &b.right_algebra)?;
        }
        for b in &self.balanced {
            let find = |r: &str| self.modules.iter().find(|m| m.name == r);
            let right = find(&b.right).ok_or_else(|| Error::Unresolved(format!("{}` in `{}", b.right, b.name)))?;
            let left = find(&b.left).ok_or_else(|| Error::Unresolved(format!("{}` in `{}", b.left, b.name)))?;
            if right.right.is_none() || left.left.is_none() {
                return Err(Error::InvalidInput(format!(
                    "`{}` needs a right action on `{}` and a left action on `{}`",
                    b.name, b.right, b.left
                )));
            }
            if right.algebra != left.algebra {
                return Err(Error::InvalidInput(format!("`{}` pairs modules over different algebras", b.name)));
            }
        }
        let field = Field::new(self.field);
        for (place, text) in self.literals() {
            parse_scalar(&field, text).map_err(|e| literal_error(&place, text, e))?;
        }
        Ok(())
    }

    /// Every scalar literal with a description of where it occurs.
    pub fn literals(&self) -> Vec<(String, &str)> {
        let mut out = Vec::new();
        fn entries<'a>(out: &mut Vec<(String, &'a str)>, place: String, es: &'a [EntryDecl]) {
            for e in es {
                out.push((format!("{place} {:?} -> {:?}", e.src, e.tgt), e.value.as_str()));
            }
        }
        fn opt<'a>(out: &mut Vec<(String, &'a str)>, place: String, v: &'a Option<String>) {
            if let Some(t) = v {
                out.push((place, t.as_str()));
            }
        }
        fn action<'a>(out: &mut Vec<(String, &'a str)>, owner: &str, side: &str, a: &'a ActionDecl) {
            entries(out, format!("{owner}.{side}.assoc"), &a.assoc);
            entries(out, format!("{owner}.{side}.unit"), &a.unit);
            opt(out, format!("{owner}.{side}.default"), &a.default);
        }
        for a in &self.algebras {
            entries(&mut out, format!("{}.mu", a.name), &a.mu);
            opt(&mut out, format!("{}.mu_default", a.name), &a.mu_default);
            entries(&mut out, format!("{}.lambda", a.name), &a.lambda);
            entries(&mut out, format!("{}.rho", a.name), &a.rho);
        }
        for m in &self.modules {
            if let Some(r) = &m.right {
                action(&mut out, &m.name, "right", r);
            }
            if let Some(l) = &m.left {
                action(&mut out, &m.name, "left", l);
            }
        }
        for b in &self.bimodules {
            action(&mut out, &b.name, "left", &b.left);
            action(&mut out, &b.name, "right", &b.right);
            entries(&mut out, format!("{}.beta", b.name), &b.beta);
            opt(&mut out, format!("{}.beta_default", b.name), &b.beta_default);
        }
        for b in &self.balanced {
            entries(&mut out, format!("{}.beta", b.name), &b.beta);
            opt(&mut out, format!("{}.beta_default", b.name), &b.beta_default);
        }
        out
    }
}

fn literal_error(place: &str, text: &str, e: Error) -> Error {
    Error::InvalidInput(format!("scalar `{text}` at {place}: {e}"))
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests;
