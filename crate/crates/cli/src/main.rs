//! Batch front end: axiom sweeps, probes, the identity corpus, oracle
//! cross-checks and fixtures, each emitting one versioned report.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use confal::{Error, HalfInt};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "confal", version, about = "Exact checks for conformal superalgebras of matrix type")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Include wall-clock time in the report (makes it run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Run on one thread regardless of `CONFAL_THREADS`.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyArgs {
    /// rkk:L, star1, star2, dagger1, dagger2, super:L, superstar or superdagger.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub k: Option<u16>,
    #[arg(long)]
    pub k1: Option<u16>,
    #[arg(long)]
    pub k2: Option<u16>,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    /// Check a random subset of this many elements instead of all of them.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derivative, skew-symmetry and Jacobi over a basis sweep. Without
    /// --family the sweep covers the whole algebra.
    VerifyAxioms {
        #[command(flatten)]
        family: FamilyArgs,
        /// Weight bound for the pair sweeps.
        #[arg(long, default_value = "4")]
        max_weight: HalfInt,
        /// Weight bound for Jacobi triples; defaults to one below --max-weight,
        /// or one half below it for split gradings.
        #[arg(long)]
        jacobi_weight: Option<HalfInt>,
        /// Largest generic mode index in Jacobi.
        #[arg(long, default_value_t = 4)]
        max_mode: u32,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Ideal closure from every low-weight basis element.
    ProbeSimplicity {
        #[command(flatten)]
        family: FamilyArgs,
        /// Target weight W: every basis element up to W must be reached.
        #[arg(long, visible_alias = "max-weight", default_value = "5")]
        window: HalfInt,
        #[arg(long, default_value_t = 2)]
        slack: u32,
        /// Seeds are all basis elements up to this weight.
        #[arg(long)]
        seed_max: Option<HalfInt>,
    },
    /// Subalgebra generated by the designated generating set.
    ProbeGenerators {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "6")]
        max_weight: HalfInt,
        #[arg(long, default_value_t = 0)]
        slack: u32,
    },
    /// Evaluates the tagged closed-form identities.
    Corpus {
        /// Restrict to these tags. Repeatable.
        #[arg(long)]
        tag: Vec<String>,
    },
    /// Compares the even sector with the free-field realization.
    OracleCrosscheck {
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
    },
    /// Homogeneous products on a weight space against matrix products.
    JordanCheck {
        /// A, lie, B or C.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        k: u16,
        #[arg(long, default_value_t = 0)]
        ell: u32,
    },
    /// Lists the canonical basis of a family at one weight.
    Basis {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        weight: HalfInt,
    },
    /// Axiom suite and generating-series identities on loop-sl2 and Virasoro.
    Fixtures {
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
    /// Every mode of every basis pair stays inside the family.
    ClosureCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "4")]
        max_weight: HalfInt,
    },
}

/// Parameter and input errors map to exit code 2; anything else raised
/// mid-computation counts as a violation.
fn error_exit(err: &Error) -> u8 {
    match err {
        Error::Config(_) | Error::InvalidFamily(_) | Error::Parse(_) | Error::InvalidKey(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(err) = confal::exec::init_threads_from_env() {
        eprintln!("error: {err}");
        return ExitCode::from(2);
    }
    let started = std::time::Instant::now();
    let mut report = match commands::run(&cli.command, &cli.output) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(error_exit(&err));
        }
    };
    if cli.output.timings {
        report.elapsed_ms = Some(started.elapsed().as_millis());
    }
    if let Err(err) = report.emit(cli.output.format, cli.output.output.as_deref()) {
        eprintln!("error: cannot write report: {err}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.outcome.exit_code())
}
