//! `gvpfrs` — granular variable precision fuzzy rough approximations on
//! the command line.
//!
//! Subcommands: `approximate` (lower/upper approximations of a problem
//! file), `check-relation` (relation property report), `laws` (randomized
//! law suite), `bench` (selection vs brute-force timing).
//!
//! Exit codes: 0 success, 1 validation/parse error, 2 premise/refusal
//! error, 3 law failures. Data goes to stdout, diagnostics to stderr.

mod bench;
mod commands;
mod problem;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: JSON errors, out-of-range values, unknown names.
    Validation(String),
    /// Structurally valid request whose premises fail (non-dual pair,
    /// non-involutive negation) or that the tool refuses (oracle caps).
    Premise(String),
    /// One or more laws reported failures.
    LawFailures(usize),
}

impl CliError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }

    pub fn premise(msg: impl Into<String>) -> Self {
        CliError::Premise(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Premise(_) => 2,
            CliError::LawFailures(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "error: {m}"),
            CliError::Premise(m) => write!(f, "refused: {m}"),
            CliError::LawFailures(n) => write!(f, "{n} law(s) reported failures"),
        }
    }
}

#[derive(Parser)]
#[command(name = "gvpfrs", version, about = "Granular variable precision fuzzy rough sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Lower,
    Upper,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the variable precision lower/upper approximations of a
    /// problem file.
    Approximate {
        /// Problem JSON path.
        input: PathBuf,
        /// Which approximation(s) to compute.
        #[arg(long, value_enum, default_value = "both")]
        side: Side,
        /// Also run the brute-force enumeration oracle (subject to the
        /// oracle cap) and report the largest per-point discrepancy.
        #[arg(long)]
        oracle: bool,
        /// Override the problem file's bisection tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Report seriality, reflexivity, symmetry and O-transitivity of the
    /// problem file's relation.
    CheckRelation {
        /// Problem JSON path.
        input: PathBuf,
        /// Overlap name override (otherwise the file's connectives.overlap).
        #[arg(long)]
        overlap: Option<String>,
        /// Parameter for parameterized overlap names (e.g. O_p).
        #[arg(long)]
        p: Option<f64>,
        /// Slack for the property comparisons.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Run the algebraic law suite on randomized instances.
    Laws {
        /// Comma-separated law ids, or "all".
        #[arg(long, default_value = "all")]
        laws: String,
        /// Randomized trials per law.
        #[arg(long, default_value_t = 200)]
        trials: u32,
        /// Base seed (the GVPFRS_SEED environment variable overrides it).
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest generated universe.
        #[arg(long, default_value_t = 8)]
        max_universe: usize,
        /// Connective/beta overrides as a JSON file.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Time the selection method against the brute-force oracle.
    Bench {
        /// Comma-separated universe sizes.
        #[arg(long, default_value = "16,64,256")]
        sizes: String,
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
        /// Timed repetitions per size.
        #[arg(long, default_value_t = 3)]
        reps: u32,
        /// Base seed (the GVPFRS_SEED environment variable overrides it).
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Run the enumeration oracle for sizes up to this bound (hard
        /// wall at 20).
        #[arg(long, default_value_t = 0)]
        include_oracle_up_to: usize,
    },
}

/// GVPFRS_SEED overrides --seed when set.
fn effective_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var("GVPFRS_SEED") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::validation(format!("GVPFRS_SEED = {v:?} is not a u64"))),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Approximate {
            input,
            side,
            oracle,
            tolerance,
        } => commands::approximate(&input, side, oracle, tolerance),
        Command::CheckRelation {
            input,
            overlap,
            p,
            tolerance,
        } => commands::check_relation(&input, overlap.as_deref(), p, tolerance),
        Command::Laws {
            laws,
            trials,
            seed,
            max_universe,
            config,
        } => commands::laws(&laws, trials, effective_seed(seed)?, max_universe, config.as_deref()),
        Command::Bench {
            sizes,
            beta,
            reps,
            seed,
            include_oracle_up_to,
        } => bench::run(&sizes, beta, reps, effective_seed(seed)?, include_oracle_up_to),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
