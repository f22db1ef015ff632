//! The `liecoh` command line: document I/O, commands and report rendering.
//!
//! Exit status is 0 when a computation succeeds or a verification passes,
//! 1 when a verification is refuted or a witness is found, 2 on any error.

mod document;
mod report;

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Parser, Subcommand};

pub use document::{
    emit, parse, FamilySection, InputDocument, MemberEntry, ModuleSection, BUILTIN_MODULES,
};

use crate::cohomology::{cohomology_dims, verify_hazewinkel, verify_kunneth, CohomologyOptions};
use crate::error::{Error, Result};
use crate::liealg::{catalog, LieAlgebra};
use crate::repmod::IrreducibilityConfig;
use crate::theorem::{check_conditions, verify_corollary, witness_search, ModuleFamily};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "liecoh",
    version,
    about = "Exact Lie algebra cohomology over Q"
)]
pub struct Cli {
    /// Seed for the randomized irreducibility search.
    #[arg(long, global = true, default_value_t = IrreducibilityConfig::default().seed)]
    pub seed: u64,
    /// Largest cochain space (columns of a coboundary matrix) to build.
    #[arg(long, global = true, default_value_t = CohomologyOptions::default().column_ceiling)]
    pub ceiling: usize,
    /// Also print cocycle representatives of each cohomology class.
    #[arg(long, global = true)]
    pub representatives: bool,
    /// Structured JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A SOURCE is a document path, `-` for standard input, or `@name` for a
/// catalog algebra.
#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Structural flags of the algebra.
    Check { source: String },
    /// Cohomology table of one module.
    Cohomology { source: String, module: String },
    /// Hazewinkel duality check for one module.
    Duality { source: String, module: String },
    /// Künneth check for an outer tensor product.
    Kunneth {
        left: String,
        left_module: String,
        right: String,
        right_module: String,
    },
    /// The four equivalent conditions over the module family.
    VerifyTheorem { source: String },
    /// Vanishing of H^n, n >= 3, against the structural classification.
    VerifyCorollary { source: String },
    /// Search for a module with nonvanishing H^1 or H^{dim L - 1}.
    Witness {
        source: String,
        #[arg(long, default_value_t = 200)]
        budget: usize,
    },
    /// Print a catalog algebra as a document.
    Catalog { name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Cli {
    fn options(&self) -> CohomologyOptions {
        CohomologyOptions {
            column_ceiling: self.ceiling,
            representatives: self.representatives,
        }
    }

    fn config(&self) -> IrreducibilityConfig {
        IrreducibilityConfig {
            seed: self.seed,
            ..IrreducibilityConfig::default()
        }
    }
}

/// Reads a SOURCE argument.
pub fn load(source: &str) -> Result<InputDocument> {
    if let Some(name) = source.strip_prefix('@') {
        return Ok(InputDocument::from_algebra(catalog(name)?));
    }
    let read_err = |e: std::io::Error| Error::Io {
        path: source.to_owned(),
        message: e.to_string(),
    };
    let text = if source == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(read_err)?
    } else {
        std::fs::read_to_string(source).map_err(read_err)?
    };
    parse(&text)
}

fn family_for(
    doc: &InputDocument,
    algebra: &Arc<LieAlgebra>,
    config: &IrreducibilityConfig,
) -> Result<ModuleFamily> {
    let Some(section) = &doc.family else {
        return ModuleFamily::default_for(algebra.clone(), config);
    };
    let modules = section
        .members
        .iter()
        .map(|m| doc.module(algebra, &m.name))
        .collect::<Result<Vec<_>>>()?;
    let mut family = ModuleFamily::new(algebra.clone(), modules, section.adequate, config)?;
    for (i, m) in section.members.iter().enumerate() {
        if let Some(claim) = m.claim {
            family.apply_claim(i, claim)?;
        }
    }
    Ok(family)
}

/// Runs one parsed command, returning the exit status and the report.
pub fn run(cli: &Cli) -> Result<(i32, String)> {
    let options = cli.options();
    let config = cli.config();
    let json = cli.json;
    let passed = |ok: bool| if ok { EXIT_PASS } else { EXIT_REFUTED };
    match &cli.command {
        Command::Check { source } => {
            let doc = load(source)?;
            let flags = doc.algebra.structure_flags();
            let split = doc.algebra.is_ss_plus_nilpotent();
            Ok((EXIT_PASS, report::check(&doc.algebra, &flags, &split, json)))
        }
        Command::Cohomology { source, module } => {
            let doc = load(source)?;
            let alg = Arc::new(doc.algebra.clone());
            let m = doc.module(&alg, module)?;
            let r = cohomology_dims(&m, &options)?;
            Ok((EXIT_PASS, report::cohomology(&m, &r, json)))
        }
        Command::Duality { source, module } => {
            let doc = load(source)?;
            let alg = Arc::new(doc.algebra.clone());
            let m = doc.module(&alg, module)?;
            let r = verify_hazewinkel(&m, &options)?;
            Ok((passed(r.passes()), report::identity(&r, &m, None, json)))
        }
        Command::Kunneth {
            left,
            left_module,
            right,
            right_module,
        } => {
            let (ld, rd) = (load(left)?, load(right)?);
            let (la, ra) = (Arc::new(ld.algebra.clone()), Arc::new(rd.algebra.clone()));
            let (lm, rm) = (ld.module(&la, left_module)?, rd.module(&ra, right_module)?);
            let r = verify_kunneth(&lm, &rm, &options)?;
            Ok((
                passed(r.passes()),
                report::identity(&r, &lm, Some(&rm), json),
            ))
        }
        Command::VerifyTheorem { source } => {
            let doc = load(source)?;
            let alg = Arc::new(doc.algebra.clone());
            let family = family_for(&doc, &alg, &config)?;
            let v = check_conditions(&alg, &family, &options)?;
            Ok((passed(v.consistent), report::theorem(&v, json)))
        }
        Command::VerifyCorollary { source } => {
            let doc = load(source)?;
            let alg = Arc::new(doc.algebra.clone());
            let family = family_for(&doc, &alg, &config)?;
            let c = verify_corollary(&alg, &family, &options)?;
            Ok((passed(c.agree), report::corollary(&c, json)))
        }
        Command::Witness { source, budget } => {
            let doc = load(source)?;
            let alg = Arc::new(doc.algebra.clone());
            let hit = witness_search(&alg, *budget, &options, &config)?;
            let status = if hit.is_some() {
                EXIT_REFUTED
            } else {
                EXIT_PASS
            };
            Ok((status, report::witness(hit.as_ref(), *budget, json)))
        }
        Command::Catalog { name } => {
            let doc = InputDocument::from_algebra(catalog(name)?);
            let text = emit(&doc);
            let out = if json {
                report::to_json(&serde_json::json!({ "name": name, "document": text }))
            } else {
                text
            };
            Ok((EXIT_PASS, out))
        }
    }
}

/// Parses arguments (the first is the program name) and runs the command.
/// Usage errors exit with status 2; `--help` and `--version` with 0.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(&cli) {
        Ok((status, stdout)) => Outcome {
            status,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: EXIT_ERROR,
            stdout: String::new(),
            stderr: if cli.json {
                report::to_json(&serde_json::json!({ "error": e.to_string() }))
            } else {
                format!("error: {e}\n")
            },
        },
    }
}
