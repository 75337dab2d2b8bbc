//! The `e8cas` command line: argument parsing, output formats, exit codes
//! and the result cache.

pub mod cache;
mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use e8cas::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INVALID_ARGS: i32 = 2;
pub const EXIT_RESOURCE_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "e8cas", version, about = "Exact E8 orbit, character and Casimir eigenvalue computations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Directory for cached Σ sets and Freudenthal tables.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for every random draw.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMethod {
    Transversal,
    Sumset,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharMethod {
    Table,
    Enumeration,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultMethod {
    Freudenthal,
    Chars,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisName {
    KFamily,
    RootInvariants,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// A8 dominant weights in the E8 orbit of a weight.
    SigmaSet {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = SigmaMethod::Transversal)]
        method: SigmaMethod,
    },
    /// Size of the E8 Weyl orbit.
    OrbitSize {
        #[arg(long)]
        weight: String,
    },
    /// Degree-M character of an E8 orbit (or of the representation) at a point.
    Char {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        weight: String,
        /// Whole representation instead of the single orbit.
        #[arg(long)]
        rep: bool,
        /// x_1..x_8 as comma-separated rationals; random from --seed if absent.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_enum, default_value_t = CharMethod::Table)]
        method: CharMethod,
    },
    /// Coefficient, normalized eigenvalue and K value for one index.
    CasimirEval {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        weight: String,
        /// Value for the undefined constant in K1(12).
        #[arg(long)]
        k12_zero: Option<String>,
    },
    /// Power-sum dualities of degrees 10, 11, 12, 14.
    VerifyDualities {
        /// Expand every degree exactly (degree 14 takes tens of seconds).
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
    /// Derived orbit-character tables against the printed ones.
    VerifyOmega,
    /// Coefficient classes, K-family rank and span at one degree.
    VerifyK {
        #[arg(long)]
        degree: u32,
        /// Seeded random weights for the rank and transcription checks.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Largest representation dimension used for class analysis.
        #[arg(long, default_value_t = 10_000_000)]
        max_dim: u64,
        #[arg(long)]
        k12_zero: Option<String>,
    },
    /// Dominant weight multiplicities.
    Multiplicities {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = MultMethod::Both)]
        method: MultMethod,
        #[arg(long, value_enum, default_value_t = BasisName::KFamily)]
        basis: BasisName,
    },
    /// Dimension by orbit sums and by the Weyl formula.
    Dims {
        #[arg(long)]
        weight: String,
    },
    /// Recompute up to five cached entries and compare byte for byte.
    VerifyCache {
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

/// Result of a command before formatting.
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Only tabular commands provide CSV.
    pub csv: Option<String>,
    pub passed: bool,
}

/// Everything `run` produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) enum Failure {
    Core(Error),
    Args(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(f: &Failure) -> i32 {
    match f {
        Failure::Args(_) => EXIT_INVALID_ARGS,
        Failure::Io(_) => EXIT_VERIFICATION_FAILED,
        Failure::Core(e) => match e {
            Error::OrbitTooLarge { .. } => EXIT_RESOURCE_GUARD,
            Error::IndexOutOfRange { .. }
            | Error::TooManyParts { .. }
            | Error::UnsupportedDegree(_)
            | Error::UnsupportedIndex { .. }
            | Error::NotBelow { .. }
            | Error::InvalidWeight(_)
            | Error::InvalidArgument(_)
            | Error::NotARoot(_) => EXIT_INVALID_ARGS,
            Error::Singular(_) | Error::VanishingReference(_) => EXIT_VERIFICATION_FAILED,
        },
    }
}

fn message(f: &Failure) -> String {
    match f {
        Failure::Core(e) => e.to_string(),
        Failure::Args(s) => s.clone(),
        Failure::Io(e) => format!("i/o error: {e}"),
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_ARGS } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    if let Some(n) = cli.global.threads {
        // Only the first call in a process can size the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match commands::dispatch(&cli) {
        Err(f) => Outcome { code: exit_code(&f), stdout: String::new(), stderr: format!("error: {}\n", message(&f)) },
        Ok(report) => {
            let body = match cli.global.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable") + "\n",
                Format::Text => report.text,
                Format::Csv => match report.csv {
                    Some(c) => c,
                    None => {
                        return Outcome {
                            code: EXIT_INVALID_ARGS,
                            stdout: String::new(),
                            stderr: "error: csv output is only available for sigma-set and multiplicities\n".into(),
                        }
                    }
                },
            };
            let code = if report.passed { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
            Outcome { code, stdout: body, stderr: String::new() }
        }
    }
}
