//! Commands over a [`Workspace`], each producing a report, a list of computed
//! facts and a verdict.

use serde_json::{json, Value};

use crate::ambient::{condensation_split, verify_splitting, Path};
use crate::document::{Workspace, IDENTITY_PREFIX, REGULAR_PREFIX};
use crate::error::{Error, Result};
use crate::morita::{center_rank, eilenberg_watts_roundtrip, find_morita_witness, indecomposable};
use crate::reltensor::{bimodule_tensor, build_condensation_monad, relative_tensor, verify_monad};
use crate::report::Report;
use crate::separability::{check_rigidity, check_separability, is_rigid, is_separable, rigidity_candidate};
use crate::structures::{check_algebra, check_balanced, check_bimodule, check_left_module, check_module};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Algebra,
    Module,
    Bimodule,
    Balanced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check { kind: CheckKind, name: String },
    Rigid { algebra: String },
    Separable { algebra: String },
    Tensor { over: String, right: String, left: String },
    SplitMonad { over: String, right: String, left: String },
    VerifyMonad { over: String, right: String, left: String },
    BimoduleCompose { first: String, second: String },
    MoritaTest { first: String, second: String },
    Center { algebra: String },
    Indecomposable { algebra: String },
    EwRoundtrip { bimodule: String },
}

impl Command {
    /// The entity names the command refers to.
    pub fn names(&self) -> Vec<&str> {
        match self {
            Command::Check { name, .. } => vec![name],
            Command::Rigid { algebra }
            | Command::Separable { algebra }
            | Command::Center { algebra }
            | Command::Indecomposable { algebra } => vec![algebra],
            Command::Tensor { over, right, left }
            | Command::SplitMonad { over, right, left }
            | Command::VerifyMonad { over, right, left } => vec![over, right, left],
            Command::BimoduleCompose { first, second } | Command::MoritaTest { first, second } => vec![first, second],
            Command::EwRoundtrip { bimodule } => vec![bimodule],
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Command::Check { kind, name } => {
                let k = match kind {
                    CheckKind::Algebra => "algebra",
                    CheckKind::Module => "module",
                    CheckKind::Bimodule => "bimodule",
                    CheckKind::Balanced => "balanced",
                };
                format!("check {k} {name}")
            }
            Command::Rigid { algebra } => format!("rigid {algebra}"),
            Command::Separable { algebra } => format!("separable {algebra}"),
            Command::Tensor { over, right, left } => format!("tensor --over {over} {right} {left}"),
            Command::SplitMonad { over, right, left } => format!("split-monad --over {over} {right} {left}"),
            Command::VerifyMonad { over, right, left } => format!("verify-monad --over {over} {right} {left}"),
            Command::BimoduleCompose { first, second } => format!("bimodule-compose {first} {second}"),
            Command::MoritaTest { first, second } => format!("morita-test {first} {second}"),
            Command::Center { algebra } => format!("center {algebra}"),
            Command::Indecomposable { algebra } => format!("indecomposable {algebra}"),
            Command::EwRoundtrip { bimodule } => format!("ew-roundtrip {bimodule}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// a definite negative answer
    Fail,
    /// an error, or a search that ended without an answer
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub command: String,
    pub status: Status,
    pub report: Report,
    pub facts: Vec<(String, Value)>,
    pub error: Option<String>,
}

impl Outcome {
    fn new(command: &Command) -> Outcome {
        Outcome {
            command: command.describe(),
            status: Status::Pass,
            report: Report::new(command.describe()),
            facts: Vec::new(),
            error: None,
        }
    }

    /// An inconclusive outcome for a command that could not be set up.
    pub fn from_error(command: &Command, e: &Error) -> Outcome {
        let mut out = Outcome::new(command);
        out.status = Status::Inconclusive;
        out.error = Some(e.to_string());
        out
    }

    fn fact(&mut self, key: &str, value: Value) {
        self.facts.push((key.into(), value));
    }

    fn fail_with(&mut self, e: &Error) {
        self.status = Status::Fail;
        self.error = Some(e.to_string());
    }

    /// The machine-readable section.
    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .report
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        let facts: serde_json::Map<String, Value> = self.facts.iter().cloned().collect();
        json!({
            "command": self.command,
            "status": self.status.word(),
            "exit_code": self.status.exit_code(),
            "checks": checks,
            "facts": facts,
            "error": self.error,
        })
    }

    /// Text report followed by the JSON section.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.report);
        if !self.facts.is_empty() {
            out.push_str("facts:\n");
            for (k, v) in &self.facts {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out.push_str(&format!("status: {} (exit {})\n", self.status.word(), self.status.exit_code()));
        out.push_str("--- json ---\n");
        out.push_str(&serde_json::to_string_pretty(&self.to_json()).expect("reports serialize"));
        out.push('\n');
        out
    }
}

/// Runs a command.  Errors become an inconclusive outcome carrying the message.
pub fn execute(command: &Command, ws: &Workspace) -> Outcome {
    let mut out = Outcome::new(command);
    match run(command, ws, &mut out) {
        Ok(()) => {
            if out.status == Status::Pass && !out.report.passed() {
                out.status = Status::Fail;
            }
        }
        Err(e) => {
            out.status = Status::Inconclusive;
            out.error = Some(e.to_string());
        }
    }
    out
}

fn dims(gen: &crate::ambient::Gen) -> Value {
    json!(Path::generator(gen).dims())
}

fn run(command: &Command, ws: &Workspace, out: &mut Outcome) -> Result<()> {
    match command {
        Command::Check { kind, name } => match kind {
            CheckKind::Algebra => out.report.absorb("", check_algebra(&*ws.algebra(name)?)),
            CheckKind::Module => {
                let pair = ws.module(name)?;
                if let Some(r) = &pair.right {
                    out.report.absorb("right", check_module(r));
                }
                if let Some(l) = &pair.left {
                    out.report.absorb("left", check_left_module(l));
                }
            }
            CheckKind::Bimodule => out.report.absorb("", check_bimodule(&ws.bimodule(name)?)),
            CheckKind::Balanced => out.report.absorb("", check_balanced(&ws.balanced(name)?)),
        },
        Command::Rigid { algebra } => {
            let alg = ws.algebra(algebra)?;
            match is_rigid(&alg) {
                Ok(w) => out.report.absorb("", check_rigidity(&alg, &w)),
                Err(e @ Error::Infeasible(_)) => {
                    out.report.absorb("", check_rigidity(&alg, &rigidity_candidate(&alg)?));
                    out.fail_with(&e);
                }
                Err(e) => return Err(e),
            }
            out.fact("rigid", json!(out.status == Status::Pass));
        }
        Command::Separable { algebra } => {
            let alg = ws.algebra(algebra)?;
            match is_separable(&alg) {
                Ok(w) => out.report.absorb("", check_separability(&alg, &w)),
                Err(e @ Error::Infeasible(_)) => {
                    out.report.fail("separable", e.to_string());
                    out.fail_with(&e);
                }
                Err(e) => return Err(e),
            }
            out.fact("field", json!(ws.field.spec().to_string()));
            out.fact("ambient", json!(ws.ambient.name()));
            out.fact("separable", json!(out.status == Status::Pass));
        }
        Command::Tensor { over, right, left } => {
            let alg = ws.algebra(over)?;
            let (r, l) = (ws.right_module(right)?, ws.left_module(left)?);
            same_algebra(over, &[(right, &r.algebra.a), (left, &l.algebra.a)], &alg.a)?;
            let sep = is_separable(&alg)?;
            let rt = relative_tensor(&alg, &r, &l, &sep, &format!("{right}⊠{left}"))?;
            out.report.absorb("monad", verify_monad(&alg.field, &rt.monad));
            out.report.absorb("universal", check_balanced(&rt.t));
            out.fact("rank", json!(rt.object().rank()));
            out.fact("carrier_rank", json!(rt.monad.carrier.rank()));
            out.fact("t_dims", dims(&rt.t.f));
        }
        Command::SplitMonad { over, right, left } | Command::VerifyMonad { over, right, left } => {
            let alg = ws.algebra(over)?;
            let (r, l) = (ws.right_module(right)?, ws.left_module(left)?);
            same_algebra(over, &[(right, &r.algebra.a), (left, &l.algebra.a)], &alg.a)?;
            let sep = is_separable(&alg)?;
            let monad = build_condensation_monad(&alg, &r, &l, &sep)?;
            out.fact("carrier_rank", json!(monad.carrier.rank()));
            out.fact("e_dims", json!(monad.e.dims()));
            if matches!(command, Command::VerifyMonad { .. }) {
                out.report.absorb("", verify_monad(&alg.field, &monad));
            } else {
                let s = condensation_split(&alg.field, &monad, &format!("{right}⊠{left}"))?;
                out.report.record("splitting", verify_splitting(&alg.field, &monad, &s).map_err(|e| e.to_string()));
                out.fact("rank", json!(s.rank()));
                out.fact("f_dims", dims(&s.f));
                out.fact("g_dims", dims(&s.g));
            }
        }
        Command::BimoduleCompose { first, second } => {
            let (p, q) = (ws.bimodule(first)?, ws.bimodule(second)?);
            let sep = is_separable(&p.right.algebra)?;
            let t = bimodule_tensor(&p, &q, &sep, &format!("{first}⊠{second}"))?;
            out.report.absorb("", check_bimodule(&t.bimodule));
            out.fact("rank", json!(t.bimodule.carrier().rank()));
            out.fact("left_algebra", json!(t.bimodule.left.algebra.name));
            out.fact("right_algebra", json!(t.bimodule.right.algebra.name));
        }
        Command::MoritaTest { first, second } => {
            let (p, q) = (ws.bimodule(first)?, ws.bimodule(second)?);
            match find_morita_witness(&p, &q) {
                Ok(cert) => {
                    out.report.absorb("", cert.report.clone());
                    out.fact("reverified", json!(cert.reverify()));
                    out.fact("pq_rank", json!(cert.eq1.tensor.bimodule.carrier().rank()));
                    out.fact("qp_rank", json!(cert.eq2.tensor.bimodule.carrier().rank()));
                }
                Err(e @ Error::SearchExhausted(_)) => {
                    out.status = Status::Inconclusive;
                    out.error = Some(e.to_string());
                }
                Err(e) => return Err(e),
            }
        }
        Command::Center { algebra } => {
            let alg = ws.algebra(algebra)?;
            match center_rank(&alg) {
                Ok(c) => {
                    out.report.pass("tube algebra semisimple");
                    out.fact("rank", json!(c.rank));
                    out.fact("tube_dim", json!(c.tube_dim));
                    let blocks: Vec<Value> = c
                        .blocks
                        .iter()
                        .map(|b| json!({"size": b.size, "twist": b.twist.as_ref().map(ToString::to_string)}))
                        .collect();
                    out.fact("blocks", json!(blocks));
                }
                Err(e @ Error::NotSemisimple(_)) => {
                    out.report.fail("tube algebra semisimple", e.to_string());
                    out.fail_with(&e);
                }
                Err(e) => return Err(e),
            }
        }
        Command::Indecomposable { algebra } => {
            let ind = indecomposable(&*ws.algebra(algebra)?)?;
            out.fact("dim", json!(ind.dim));
            out.fact("indecomposable", json!(ind.indecomposable));
            out.report.record(
                "indecomposable",
                if ind.indecomposable {
                    Ok(())
                } else {
                    Err(format!("bimodule endomorphisms of dimension {}", ind.dim))
                },
            );
        }
        Command::EwRoundtrip { bimodule } => {
            let p = ws.bimodule(bimodule)?;
            out.report.absorb("", eilenberg_watts_roundtrip(&p));
            out.fact("rank", json!(p.carrier().rank()));
        }
    }
    Ok(())
}

fn same_algebra(
    over: &str,
    modules: &[(&str, &crate::ambient::TwoObject)],
    a: &crate::ambient::TwoObject,
) -> Result<()> {
    for (name, obj) in modules {
        if *obj != a {
            return Err(Error::InvalidInput(format!("module `{name}` is not over `{over}`")));
        }
    }
    Ok(())
}

/// Strips the `regular:` and `id:` prefixes, giving the declared names to look up.
pub fn declared_names(command: &Command) -> Vec<String> {
    command
        .names()
        .into_iter()
        .map(|n| n.strip_prefix(REGULAR_PREFIX).or_else(|| n.strip_prefix(IDENTITY_PREFIX)).unwrap_or(n).to_string())
        .collect()
}
