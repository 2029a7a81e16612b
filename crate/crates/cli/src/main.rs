//! `higgsrel`: generate ideal generators, check candidate relations and run
//! verification sweeps.

mod commands;
mod range;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use range::IntRange;

#[derive(Parser, Debug)]
#[command(name = "higgsrel", version, about = "Relation ideals of rank-2 Higgs moduli cohomology, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the generators of I^g_n up to a total degree.
    Gen(GenArgs),
    /// Decide whether a polynomial in a, b, g3, u is an equivariant relation.
    Check(CheckArgs),
    /// Run one of the verification suites.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Dims,
    Main,
    Identities,
    Series,
    Sympow,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Genus: a value or an inclusive range `a..b`.
    #[arg(long, default_value = "2")]
    g: IntRange,
    /// Twist: a value or an inclusive range `a..b`.
    #[arg(long, default_value = "0")]
    n: IntRange,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    common: Common,
    /// Largest total degree to list.
    #[arg(long)]
    max_degree: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    common: Common,
    /// Polynomial text, e.g. "2*a*b + 2*g3" or "u^2 - b".
    #[arg(long)]
    poly: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest total degree for the oracle comparison (default 3g+3+n).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Series truncation order (default 2(g+n)+4, or HIGGSREL_ORDER).
    #[arg(long)]
    order: Option<usize>,
    /// Seed for the sampled series in the symmetric-product suite.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Failure modes that end the run.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input: exit code 2.
    Usage(String),
}

impl From<higgsrel::Error> for Failure {
    fn from(e: higgsrel::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn configure_jobs(common: &Common) -> Result<(), Failure> {
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        // a second call only fails if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => configure_jobs(&a.common).and_then(|_| commands::gen(a)),
        Command::Check(a) => configure_jobs(&a.common).and_then(|_| commands::check(a)),
        Command::Verify(a) => configure_jobs(&a.common).and_then(|_| commands::verify(a)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
