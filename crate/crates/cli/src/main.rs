//! `hfree`: invariant reports, thresholds, exact censuses, sampling sweeps
//! and bound verification for sparse H-free graphs.
//!
//! Exit codes: 0 success, 2 input error, 3 precondition violation,
//! 4 failed verification.

mod commands;
mod manifest;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CensusArgs, InputError, InvariantsArgs, SampleArgs, ThresholdArgs, VerifyBoundsArgs, Violation};

#[derive(Parser, Debug)]
#[command(name = "hfree", version, about = "Sparse H-free graph toolkit")]
struct Cli {
    /// Worker threads (default: all cores); results do not depend on it
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic number, criticality, densities and classification of H
    Invariants(InvariantsArgs),
    /// Evaluate the threshold m_H(n)
    Threshold(ThresholdArgs),
    /// Exact counts of H-free graphs split by G(r,k) membership (CSV)
    Census(CensusArgs),
    /// Estimated G(r,k) fraction of random H-free graphs (CSV)
    Sample(SampleArgs),
    /// Check the probabilistic inequalities on a seeded corpus (JSON)
    VerifyBounds(VerifyBoundsArgs),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Violation>().is_some() {
        4
    } else if err.downcast_ref::<InputError>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        2
    } else if let Some(e) = err.downcast_ref::<hfree::Error>() {
        if e.is_input_error() {
            2
        } else {
            3
        }
    } else if err.downcast_ref::<hfree::graph::graph6::Graph6Error>().is_some() {
        2
    } else {
        3
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| InputError(format!("--threads: {e}")))?;
    }
    match &cli.command {
        Command::Invariants(a) => commands::invariants(a),
        Command::Threshold(a) => commands::threshold(a),
        Command::Census(a) => commands::census(a),
        Command::Sample(a) => commands::sample(a),
        Command::VerifyBounds(a) => commands::verify_bounds(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
