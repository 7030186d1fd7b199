//! `zczseq`: generate, verify and analyze spectrally constrained ZCZ
//! sequence sets from JSON job configs.
//!
//! Exit status: 0 success, 1 invalid configuration, 2 failed check,
//! 3 unreadable or malformed files.

pub mod commands;
pub mod config;
mod error;
pub mod io;
pub mod random;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use config::{plan, Job, JobConfig, Overrides};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "zczseq",
    version,
    about = "Spectrally constrained ZCZ sequence sets"
)]
pub struct Cli {
    /// Relative zero threshold for correlation and spectral checks.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for `"random"` parameter blocks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the sequence sets and write CSV files plus a manifest.
    Generate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the verification suite and write verify_report.json.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
    /// Export correlation profiles and zone/PAPR reports.
    Analyze {
        /// Sequence CSV files or a manifest.json.
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let ov = Overrides {
        tol: cli.tol,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Generate { config } => commands::generate(config, ov).map(drop),
        Command::Verify { config } => commands::verify(config, ov).map(drop),
        Command::Analyze { inputs, out } => commands::analyze(inputs, out, ov).map(drop),
    }
}
