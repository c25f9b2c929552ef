//! Command-line front end: argument parsing, dispatch to the library and
//! report rendering. [`run`] does all the work so that it can be tested
//! without spawning a process.

mod batch;
mod reports;

use std::path::{Path, PathBuf};

use alexandria::brieskorn::{
    brieskorn_family_capped, brieskorn_module_capped, charpoly_brieskorn_capped, milnor_number,
    thom_sebastiani_join, DEFAULT_MAX_MILNOR,
};
use alexandria::certify::{self, GlobalHypersurface};
use alexandria::cycmod::CycModule;
use alexandria::pencil::{validate_factorization, GenericPencilInput, PencilInput};
use alexandria::Poly;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use reports::*;

/// Exit status for malformed input: bad arguments, unreadable files, schema
/// violations.
pub const EXIT_INVALID: i32 = 2;
/// Exit status for well-formed input that violates a mathematical
/// precondition, such as asking for the order of a non-torsion module.
pub const EXIT_PRECONDITION: i32 = 3;

pub const MAX_MILNOR_ENV: &str = "ALEXANDRIA_MAX_MILNOR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {reason}")]
    Io { path: PathBuf, reason: String },
    #[error("{path}: schema violation: {reason}")]
    Schema { path: PathBuf, reason: String },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Library(#[from] alexandria::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_precondition() => EXIT_PRECONDITION,
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "alexandria", version, about = "Exact Alexander-type invariants of hypersurface complements")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial of the monodromy of x_1^a_1 + ... + x_r^a_r.
    Charpoly {
        /// Comma-separated exponents, e.g. 2,3.
        exponents: String,
    },
    /// Module of a join f(x) + g(y): tensor product of the two modules.
    Join {
        /// Exponent list of a Brieskorn singularity, or a module JSON file.
        left: String,
        right: String,
        /// Degrees of the two hypersurfaces, e.g. 6,6.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// The hypersurface family g_{D/d_1}^{d_1} + ... = 0 with its module.
    Family {
        exponents: String,
        /// Dimension n; must equal the number of exponents minus one.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Module of a pencil from braid monodromy (or monodromy matrices).
    Pencil {
        input: Option<PathBuf>,
        /// Input gives monodromy matrices and degeneration images.
        #[arg(long)]
        generic: bool,
        /// Process every *.json file in a directory.
        #[arg(long, conflicts_with = "input")]
        batch: Option<PathBuf>,
    },
    /// Divisibility and vanishing certificates for a global hypersurface.
    Certify {
        input: Option<PathBuf>,
        #[arg(long)]
        assert_ample: bool,
        #[arg(long)]
        assert_h_vanishing: bool,
        /// Order at infinity, e.g. "t^6-1".
        #[arg(long)]
        p_infinity: Option<String>,
        #[arg(long, conflicts_with = "input")]
        batch: Option<PathBuf>,
    },
    /// Covariants M / (t^d - 1) M: the projective complement's module.
    Covariants {
        /// Exponent list of a Brieskorn singularity, or a module JSON file.
        module: String,
        #[arg(long)]
        degree: u64,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(e: &CliError) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Milnor-number cap from the environment, or the default.
pub fn max_milnor_from_env() -> Result<u128, CliError> {
    match std::env::var(MAX_MILNOR_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Argument(format!("{MAX_MILNOR_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_MILNOR),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cap = match max_milnor_from_env() {
        Ok(c) => c,
        Err(e) => return Outcome::failure(&e),
    };
    run_with_cap(cli, cap)
}

pub fn run_with_cap(cli: &Cli, cap: u128) -> Outcome {
    match &cli.command {
        Command::Pencil { batch: Some(dir), .. } | Command::Certify { batch: Some(dir), .. } => {
            batch::run_batch(cli, dir, cap)
        }
        _ => match render(cli, cap) {
            Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
            Err(e) => Outcome::failure(&e),
        },
    }
}

/// Full output of a single (non-batch) command, or the error. Nothing is
/// printed before the whole result is available.
pub fn render(cli: &Cli, cap: u128) -> Result<String, CliError> {
    render_for_input(cli, None, cap)
}

pub(crate) fn render_for_input(cli: &Cli, input_override: Option<&Path>, cap: u128) -> Result<String, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Charpoly { exponents } => {
            let exps = parse_exponents(exponents)?;
            let charpoly: Poly = charpoly_brieskorn_capped(&exps, cap)?;
            let report = CharpolyReport {
                exponents: exps.clone(),
                milnor_number: milnor_number(&exps)?,
                module: brieskorn_module_capped(&exps, cap)?,
                charpoly,
            };
            emit(fmt, &report, || format!("{}\n", report.charpoly))
        }
        Command::Join { left, right, degrees } => {
            let a = module_source(left, cap)?;
            let b = module_source(right, cap)?;
            let degrees = degrees.as_deref().map(parse_degree_pair).transpose()?;
            let report = thom_sebastiani_join(&a, &b, degrees)?;
            emit(fmt, &report, || {
                let mut s = format!("module: {}\norder: {}\n", report.module, report.order);
                for w in &report.warnings {
                    s += &format!("warning: {w}\n");
                }
                s
            })
        }
        Command::Family { exponents, n } => {
            let exps = parse_exponents(exponents)?;
            if let Some(n) = n {
                if *n + 1 != exps.len() {
                    return Err(CliError::Argument(format!(
                        "--n {n} needs {} exponents, got {}",
                        n + 1,
                        exps.len()
                    )));
                }
            }
            let f = brieskorn_family_capped(&exps, cap)?;
            emit(fmt, &f, || {
                format!(
                    "equation: {}\nn: {}\ndegree: {}\nsingular points: {}\nlocal type: brieskorn {:?}\nmodule: {}\n",
                    f.equation, f.n, f.degree, f.singular_count, f.exponents, f.module
                )
            })
        }
        Command::Pencil { input, generic, .. } => {
            let path = input_override.or(input.as_deref()).ok_or_else(|| missing_input("pencil"))?;
            let report = if *generic {
                let g: GenericPencilInput = read_json(path)?;
                PencilReport::new(g.assemble()?, None)
            } else {
                let p: PencilInput = read_json(path)?;
                let module = p.assemble()?;
                PencilReport::new(module, Some(validate_factorization(&p.words()?)))
            };
            emit(fmt, &report, || report.to_text())
        }
        Command::Certify { input, assert_ample, assert_h_vanishing, p_infinity, .. } => {
            let path = input_override.or(input.as_deref()).ok_or_else(|| missing_input("certify"))?;
            let mut h: GlobalHypersurface = read_json(path)?;
            h.assert_ample |= assert_ample;
            h.assert_h_vanishing |= assert_h_vanishing;
            if let Some(p) = p_infinity {
                h.p_infinity = Some(p.parse::<Poly>()?);
            }
            let report = CertifyReport::new(&h, cap)?;
            emit(fmt, &report, || report.to_text())
        }
        Command::Covariants { module, degree } => {
            let m = module_source(module, cap)?;
            let cov = certify::projective_from_affine(&m, *degree)?;
            let report = CovariantsReport { degree: *degree, order: cov.order()?, module: m, covariants: cov };
            emit(fmt, &report, || format!("{}\n", report.covariants))
        }
    }
}

fn missing_input(cmd: &str) -> CliError {
    CliError::Argument(format!("{cmd} needs an input file or --batch <dir>"))
}

/// Canonical JSON: keys sorted (via `serde_json::Value`), pretty-printed,
/// newline terminated.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Argument(e.to_string()))?;
    Ok(serde_json::to_string_pretty(&v).expect("values always serialize") + "\n")
}

fn emit<T: Serialize>(fmt: Format, value: &T, text: impl FnOnce() -> String) -> Result<String, CliError> {
    match fmt {
        Format::Json => to_canonical_json(value),
        Format::Text => Ok(text()),
    }
}

pub fn parse_exponents(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Argument(format!("`{text}` is not a comma-separated list of exponents")))
        })
        .collect()
}

fn parse_degree_pair(text: &str) -> Result<(u64, u64), CliError> {
    match parse_exponents(text)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(CliError::Argument(format!("--degrees expects two values, got `{text}`"))),
    }
}

/// A module argument: a path to module JSON if such a file exists,
/// otherwise the exponent list of a Brieskorn singularity.
fn module_source(arg: &str, cap: u128) -> Result<CycModule, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_json(path);
    }
    Ok(brieskorn_module_capped(&parse_exponents(arg)?, cap)?)
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.to_path_buf(), reason: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema { path: path.to_path_buf(), reason: e.to_string() })
}

