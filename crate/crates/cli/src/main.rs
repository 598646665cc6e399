//! `dqwalk`: run single walks, sweeps over the coin dimension, the invariant
//! suite, and edge-list utilities.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dqwalk", version, about = "Directed quantum walk on the line with self-loops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one walk and write its position distribution as CSV.
    Run(RunArgs),
    /// Run a grid of (n, mode, seed) walks and write one summary row each.
    Sweep(SweepArgs),
    /// Run the invariant suite and report each check.
    Verify(VerifyArgs),
    /// Check an edge-list graph for equal in- and out-degree at every vertex.
    Realizable(RealizableArgs),
    /// Write the line-with-loops graph as an edge list.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Quantum,
    Classical,
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    Natural,
    Random,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value = "quantum")]
    pub mode: ModeArg,
    /// Coin dimension (n - 1 loops per vertex).
    #[arg(long)]
    pub n: usize,
    /// Number of steps.
    #[arg(long, default_value_t = 100)]
    pub t: usize,
    #[arg(long, value_enum, default_value = "natural")]
    pub pairing: PairingArg,
    /// Seed for random pairing.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Draw a new random pairing before every step.
    #[arg(long)]
    pub rerandomize: bool,
    /// Edges per loop (quantum mode only).
    #[arg(long, default_value_t = 1)]
    pub loop_length: usize,
    /// Output directory; without it the CSV goes to stdout and stats to stderr.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated modes.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "classical,quantum")]
    pub modes: Vec<ModeArg>,
    /// Comma-separated coin dimensions; defaults to 2..=32.
    #[arg(long = "n", value_delimiter = ',')]
    pub n_list: Option<Vec<usize>>,
    #[arg(long, default_value_t = 100)]
    pub t: usize,
    #[arg(long, value_enum, default_value = "natural")]
    pub pairing: PairingArg,
    /// Comma-separated seeds for random pairing.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    pub loop_length: usize,
    /// Largest n simulated with the full walk; above it natural-pairing
    /// quantum runs use the reduced walk.
    #[arg(long, default_value_t = 64)]
    pub full_limit: usize,
    /// Output directory for `sweep.csv` and per-run distribution files;
    /// without it the sweep CSV goes to stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DepthArg {
    Quick,
    Full,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    pub depth: DepthArg,
}

#[derive(Debug, Args)]
pub struct RealizableArgs {
    /// Edge-list file, or `-` for stdin.
    pub input: std::path::PathBuf,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub x_max: usize,
    #[arg(long, default_value_t = 1)]
    pub loop_length: usize,
}

pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<dqwalk::Error> for Failure {
    fn from(e: dqwalk::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("DQWALK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("DQWALK_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Run(args) => commands::run(args),
        Command::Sweep(args) => commands::sweep(args),
        Command::Verify(args) => commands::verify(args),
        Command::Realizable(args) => commands::realizable(args),
        Command::Graph(args) => commands::graph(args),
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
