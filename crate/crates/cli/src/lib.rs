//! Library surface behind the `pinvlaw` binary: argument grammar, file
//! formats, and command implementations.
//!
//! Exit codes: 0 pass/success, 1 negative verdict, 2 usage or parse error,
//! 3 numeric failure, 4 evidence/cross-check discrepancy.

pub mod commands;
pub mod format;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use pinvlaw_core::{Error as CoreError, ToleranceConfig};

use commands::{EXIT_NUMERIC, EXIT_USAGE};

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            message,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::ConvergenceFailure { .. } | CoreError::DegenerateSample => EXIT_NUMERIC,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pinvlaw",
    version,
    about = "Moore-Penrose inverses and the pseudoinverse laws of doubly commuting matrix tuples"
)]
pub struct Cli {
    /// Relative singular-value cutoff for numerical rank.
    #[arg(long = "tol-rank", global = true, value_name = "REL")]
    pub tol_rank: Option<f64>,

    /// Relative equality tolerance.
    #[arg(long = "tol-eq", global = true, value_name = "REL")]
    pub tol_eq: Option<f64>,

    /// Absolute equality floor.
    #[arg(long = "tol-abs", global = true, value_name = "ABS")]
    pub tol_abs: Option<f64>,

    /// Write a machine-readable JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the Moore-Penrose inverse of a matrix file and print the
    /// Penrose residuals.
    Pinv {
        /// Input matrix file (JSON).
        input: PathBuf,
        /// Output path for the pseudoinverse matrix file.
        output: PathBuf,
    },
    /// Check whether a tuple file is doubly commuting (exit 0) or not
    /// (exit 1), printing the per-pair residual table.
    Check {
        /// Input tuple file (JSON).
        input: PathBuf,
    },
    /// Verify the three-way reverse-order law on a tuple file.
    #[command(name = "verify-rol")]
    VerifyRol {
        /// Input tuple file (JSON).
        input: PathBuf,
    },
    /// Classify a tuple from the pseudoinverse equalities of its swapped
    /// products, cross-checked against the direct commutation test.
    Classify {
        /// Input tuple file (JSON); needs at least two entries.
        input: PathBuf,
    },
    /// Verify the staged product-of-powers pseudoinverse law on a tuple
    /// file carrying exponents.
    Powers {
        /// Input tuple file (JSON) with an `exponents` array.
        input: PathBuf,
    },
    /// Generate matrix or tuple files from seeded deterministic
    /// constructions.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output path.
        #[arg(
            short,
            long,
            global = true,
            value_name = "PATH",
            default_value = "out.json"
        )]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum GenKind {
    /// Random unitary matrix.
    Unitary {
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Matrix of exact numerical rank with spectrum in [0.1, 10].
    FixedRank {
        rows: usize,
        cols: usize,
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Doubly commuting tuple from factors on separate tensor legs.
    TensorDc {
        /// Factor dimensions (1 to 4 of them, each at most 4).
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Commuting tuple of normal matrices (one unitary conjugating seeded
    /// diagonals, zeros included).
    CommutingNormals {
        dim: usize,
        count: usize,
        /// Optional exponents to embed for the powers command.
        #[arg(long, value_delimiter = ',')]
        exponents: Option<Vec<u32>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The matrix-unit pair (E12, E21), guaranteed not doubly commuting.
    Witness { dim: usize },
}

fn tolerance_from_flags(cli: &Cli) -> Result<ToleranceConfig, CliError> {
    let defaults = ToleranceConfig::default();
    ToleranceConfig::new(
        cli.tol_rank.unwrap_or(defaults.rank_rel),
        cli.tol_eq.unwrap_or(defaults.eq_rel),
        cli.tol_abs.unwrap_or(defaults.eq_abs),
    )
    .map_err(CliError::from)
}

/// Dispatch a parsed invocation; returns the process exit code.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let tol = tolerance_from_flags(cli)?;
    match &cli.command {
        Command::Pinv { input, output } => commands::cmd_pinv(input, output, &tol, &cli.report),
        Command::Check { input } => commands::cmd_check(input, &tol, &cli.report),
        Command::VerifyRol { input } => commands::cmd_verify_rol(input, &tol, &cli.report),
        Command::Classify { input } => commands::cmd_classify(input, &tol, &cli.report),
        Command::Powers { input } => commands::cmd_powers(input, &tol, &cli.report),
        Command::Gen { kind, out } => commands::cmd_gen(kind, out),
    }
}
