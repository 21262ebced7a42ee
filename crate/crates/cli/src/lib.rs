//! Command-line front end. Every command yields a JSON run report; errors are
//! reported as `{"error": code, "detail": text}` on stderr.

pub mod commands;
pub mod input;
#[cfg(test)]
mod tests;

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use solvkit::classify::ClassifyError;
use solvkit::geom::GeomError;
use solvkit::liealg::LieError;
use solvkit::models::ModelError;
use solvkit::wang::WangError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "solvkit", version, about = "Exact checks for four-dimensional solvmanifolds")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Exit 3 when the outcome is OtherNotEnumerated or undetermined.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Include elapsed_ms in the report (breaks byte stability).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
    /// Standard input, read once when some argument is `-`.
    #[arg(skip)]
    pub stdin: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a type II monodromy or a type III extension.
    Classify(ClassifyArgs),
    /// Jacobi, unimodularity, d^2 and integrability over the whole catalog.
    CatalogVerify,
    /// Betti numbers, duality and Lefschetz data of an algebra.
    Cohomology(CohomologyArgs),
    /// Hard Lefschetz for a given 2-form.
    Lefschetz(LefschetzArgs),
    /// Lattice enumerations.
    #[command(subcommand)]
    Lattices(LatticesCommand),
    /// Explicit Inoue generators and lattices.
    #[command(subcommand)]
    Inoue(InoueCommand),
    /// Model / b1 / surface / Kodaira dimension table.
    Table,
    /// Orbifold Euler characteristic of {"euler_base", "m"}.
    Orbifold { input: String },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ClassifyArgs {
    #[arg(long = "type-ii", value_name = "MATRIX")]
    pub type_ii: Option<String>,
    #[arg(long = "type-iii", value_name = "EXTENSION")]
    pub type_iii: Option<String>,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Catalog id (e.g. `example5`, `inoue-s0:1,2`) or a structure-constant file.
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub omega: Option<String>,
}

#[derive(Args, Debug)]
pub struct LefschetzArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub omega: String,
}

#[derive(Subcommand, Debug)]
pub enum LatticesCommand {
    Hyperelliptic {
        #[arg(long, default_value_t = 6)]
        max_denominator: i64,
        #[arg(long, default_value_t = 2)]
        max_offset: i64,
        /// Verify a single class `{"eta", "pq", "st"}` instead.
        #[arg(long)]
        verify: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum InoueCommand {
    /// Generators for a 3x3 monodromy with one real and two complex eigenvalues.
    S0 { matrix: String },
    /// Lattice generators for `{"n", "B", "eps", "gamma"}`.
    Spm {
        input: String,
        #[arg(long, default_value_t = solvkit::models::inoue::SPM_OFFSET_RANGE)]
        range: i64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: String,
    pub detail: String,
    pub exit: i32,
}

impl CliError {
    pub fn input(code: &str, detail: String) -> Self {
        CliError {
            code: code.into(),
            detail,
            exit: EXIT_INVALID,
        }
    }

    pub fn wang(e: WangError) -> Self {
        let code = match &e {
            WangError::InvalidFiber(_) => "invalid_fiber",
            WangError::InvalidRank(_) => "invalid_rank",
            WangError::Malformed(_) => "bad_matrix",
            WangError::NotInvertible(_) => "not_invertible",
            WangError::EpsMismatch { .. } => "eps_mismatch",
            WangError::NotCommuting => "not_commuting",
            WangError::InvalidPower(_) => "invalid_power",
            WangError::NeedsRankOne => "unsupported",
            WangError::Exact(_) => "arithmetic",
        };
        Self::input(code, e.to_string())
    }

    pub fn classify(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Wang(w) => Self::wang(w),
            ClassifyError::NotSl3(_) => Self::input("not_unimodular", e.to_string()),
            ClassifyError::InvalidMultiplicity(_) => Self::input("invalid_multiplicity", e.to_string()),
            ClassifyError::Unsupported => Self::input("unsupported", e.to_string()),
            ClassifyError::Exact(_) => Self::input("arithmetic", e.to_string()),
        }
    }

    pub fn lie(e: LieError) -> Self {
        let code = match &e {
            LieError::Jacobi(_) => "jacobi_failure",
            LieError::NotSolvable => "not_solvable",
            LieError::InvalidParameter(_) => "invalid_parameter",
            _ => "invalid_algebra",
        };
        Self::input(code, e.to_string())
    }

    pub fn geom(e: GeomError) -> Self {
        let code = match &e {
            GeomError::Form(_) | GeomError::NotClosed(_) => "invalid_form",
            GeomError::NotAlmostComplex => "not_almost_complex",
            GeomError::Convention(_) => "internal",
            _ => "invalid_algebra",
        };
        Self::input(code, e.to_string())
    }

    pub fn model(e: ModelError) -> Self {
        match e {
            ModelError::Classify(c) => Self::classify(c),
            ModelError::Precondition(_) => Self::input("precondition", e.to_string()),
            ModelError::SolverRange { .. } => Self::input("solver_range", e.to_string()),
            ModelError::InvalidParameter(_) | ModelError::InvalidPoint { .. } => {
                Self::input("invalid_parameter", e.to_string())
            }
            ModelError::Arithmetic(_) => Self::input("arithmetic", e.to_string()),
            ModelError::Verification(_) => Self::input("verification_failed", e.to_string()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": self.code, "detail": self.detail})
    }
}

/// Result of one command before it is wrapped into a report.
pub struct Outcome {
    pub payload: Value,
    /// Raw text of every input, in argument order.
    pub inputs: Vec<String>,
    /// The outcome is OtherNotEnumerated or undetermined.
    pub unenumerated: bool,
}

pub struct RunReport {
    pub report: Value,
    pub exit: i32,
}

pub fn digest(inputs: &[String]) -> String {
    let mut h = Sha256::new();
    for s in inputs {
        h.update((s.len() as u64).to_le_bytes());
        h.update(s.as_bytes());
    }
    hex::encode(h.finalize())
}

/// Runs a parsed command; `argv` is echoed into the report.
pub fn run(cli: &Cli, argv: &[String]) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let out = commands::dispatch(cli)?;
    let mut report = json!({
        "command": argv,
        "version": env!("CARGO_PKG_VERSION"),
        "input_digest": digest(&out.inputs),
        "payload": out.payload,
    });
    if cli.timing {
        report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let exit = if cli.strict && out.unenumerated {
        EXIT_STRICT
    } else {
        EXIT_OK
    };
    Ok(RunReport { report, exit })
}

/// Full process behavior with injected streams; returns the exit code.
pub fn main_with_io(args: Vec<String>, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let detail = e.render().to_string();
            emit_error(err, &CliError::input("usage", detail.trim_end().to_string()));
            return EXIT_INVALID;
        }
    };
    if args.iter().skip(1).any(|a| a == "-") {
        let mut s = String::new();
        if let Err(e) = stdin.read_to_string(&mut s) {
            emit_error(err, &CliError::input("io_error", format!("stdin: {e}")));
            return EXIT_INVALID;
        }
        cli.stdin = Some(s);
    }
    let argv = &args[1.min(args.len())..];
    match run(&cli, argv) {
        Ok(r) => {
            let mut text = serde_json::to_string_pretty(&r.report).expect("serializable");
            text.push('\n');
            let written = match &cli.output {
                Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(detail) = written {
                emit_error(
                    err,
                    &CliError {
                        code: "io_error".into(),
                        detail,
                        exit: EXIT_IO,
                    },
                );
                return EXIT_IO;
            }
            r.exit
        }
        Err(e) => {
            emit_error(err, &e);
            e.exit
        }
    }
}

fn emit_error(err: &mut dyn Write, e: &CliError) {
    let _ = writeln!(err, "{}", serde_json::to_string(&e.to_json()).expect("serializable"));
}
