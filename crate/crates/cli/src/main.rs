use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use condensa::commands::{declared_names, execute, CheckKind, Command, Outcome};
use condensa::document::{Catalog, Document, Workspace};
use condensa::{Error, FieldSpec, Result};

/// Directory of `*.json` documents replacing the built-in catalog.
const CATALOG_ENV: &str = "CONDENSA_CATALOG";

#[derive(Parser)]
#[command(name = "condensa", version, about = "Exact checks for algebras, modules and bimodules in 2Vect and 2Vect_G")]
struct Cli {
    /// Document to read entities from (`-` for standard input); defaults to the catalog
    #[arg(long, global = true)]
    doc: Option<String>,
    /// Working field, e.g. `q`, `cyclotomic:8`, `gf:2`
    #[arg(long, global = true)]
    field: Option<String>,
    /// Ambient 2-category: `2vect` or `2vectg:<group>`
    #[arg(long, global = true)]
    ambient: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Module,
    Bimodule,
    Balanced,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every axiom of an entity
    Check { kind: Kind, name: String },
    /// Decide whether the multiplication has a bimodule right adjoint
    Rigid { algebra: String },
    /// Decide separability by solving for a bimodule section
    Separable { algebra: String },
    /// Relative tensor product of a right and a left module
    Tensor {
        #[arg(long)]
        over: String,
        right: String,
        left: String,
    },
    /// Split the condensation monad of a module pair
    SplitMonad {
        #[arg(long)]
        over: String,
        right: String,
        left: String,
    },
    /// Check the condensation monad equations of a module pair
    VerifyMonad {
        #[arg(long)]
        over: String,
        right: String,
        left: String,
    },
    /// Tensor two bimodules over their shared algebra
    BimoduleCompose { first: String, second: String },
    /// Search for and certify a Morita equivalence
    MoritaTest { first: String, second: String },
    /// Rank of the center of the unit bimodule
    Center { algebra: String },
    /// Whether the identity bimodule is simple
    Indecomposable { algebra: String },
    /// Compare a bimodule with its image under the Eilenberg-Watts roundtrip
    EwRoundtrip { bimodule: String },
    /// Inspect the catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Parse a document and print its canonical form
    Print { file: String },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List documents and the entities they declare
    List,
    /// Print one catalog document
    Show { name: String },
    /// Write every catalog document into a directory
    Export { dir: PathBuf },
}

fn read_text(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn catalog() -> Result<Catalog> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => Catalog::from_dir(&PathBuf::from(dir)),
        None => Ok(Catalog::builtin()),
    }
}

fn command_of(cmd: &Cmd) -> Option<Command> {
    let s = |x: &String| x.clone();
    Some(match cmd {
        Cmd::Check { kind, name } => {
            let kind = match kind {
                Kind::Algebra => CheckKind::Algebra,
                Kind::Module => CheckKind::Module,
                Kind::Bimodule => CheckKind::Bimodule,
                Kind::Balanced => CheckKind::Balanced,
            };
            Command::Check { kind, name: s(name) }
        }
        Cmd::Rigid { algebra } => Command::Rigid { algebra: s(algebra) },
        Cmd::Separable { algebra } => Command::Separable { algebra: s(algebra) },
        Cmd::Tensor { over, right, left } => Command::Tensor { over: s(over), right: s(right), left: s(left) },
        Cmd::SplitMonad { over, right, left } => Command::SplitMonad { over: s(over), right: s(right), left: s(left) },
        Cmd::VerifyMonad { over, right, left } => {
            Command::VerifyMonad { over: s(over), right: s(right), left: s(left) }
        }
        Cmd::BimoduleCompose { first, second } => Command::BimoduleCompose { first: s(first), second: s(second) },
        Cmd::MoritaTest { first, second } => Command::MoritaTest { first: s(first), second: s(second) },
        Cmd::Center { algebra } => Command::Center { algebra: s(algebra) },
        Cmd::Indecomposable { algebra } => Command::Indecomposable { algebra: s(algebra) },
        Cmd::EwRoundtrip { bimodule } => Command::EwRoundtrip { bimodule: s(bimodule) },
        Cmd::Catalog { .. } | Cmd::Print { .. } => return None,
    })
}

fn workspace(cli: &Cli, command: &Command) -> Result<Workspace> {
    let field = cli.field.as_deref().map(str::parse::<FieldSpec>).transpose()?;
    let doc = match &cli.doc {
        Some(path) => Document::parse(&read_text(path)?)?,
        None => {
            let names = declared_names(command);
            let refs: Vec<&str> = command.names();
            let cat = catalog()?;
            cat.find(&refs)
                .map(|(_, d)| d.clone())
                .ok_or_else(|| Error::Unresolved(format!("{}` in the catalog", names.join("`, `"))))?
        }
    };
    Workspace::build(&doc, field, cli.ambient.as_deref())
}

fn run_catalog(action: &CatalogCmd) -> Result<()> {
    let cat = catalog()?;
    match action {
        CatalogCmd::List => {
            for (name, doc) in &cat.documents {
                println!("{name} [{} / {}]: {}", doc.field, doc.ambient, doc.names().join(", "));
            }
        }
        CatalogCmd::Show { name } => {
            let doc = cat.get(name).ok_or_else(|| Error::Unresolved(name.clone()))?;
            print!("{}", doc.print());
        }
        CatalogCmd::Export { dir } => {
            std::fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
            for (name, doc) in &cat.documents {
                let path = dir.join(format!("{name}.json"));
                std::fs::write(&path, doc.print())
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let plain = match &cli.command {
        Cmd::Catalog { action } => Some(run_catalog(action)),
        Cmd::Print { file } => Some(read_text(file).and_then(|t| Document::parse(&t)).map(|d| print!("{}", d.print()))),
        _ => None,
    };
    if let Some(res) = plain {
        return match res {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let command = command_of(&cli.command).expect("an entity command");
    let outcome = match workspace(&cli, &command) {
        Ok(ws) => execute(&command, &ws),
        Err(e) => Outcome::from_error(&command, &e),
    };
    print!("{}", outcome.render());
    ExitCode::from(outcome.status.exit_code() as u8)
}
