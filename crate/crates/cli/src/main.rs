//! Command-line front end for Hilbert-curve sampling experiments:
//! sampling, ordering, feature extraction, coverage, timing, and
//! classification, all emitting reproducible CSV artifacts.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "hilbert-ela",
    version,
    about = "Hilbert-curve sampling and ordering experiments for landscape analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sample and write it as CSV.
    Sample(commands::sample::SampleArgs),
    /// Reorder a sample CSV; emits the reordered sample and step sizes.
    Order(commands::order::OrderArgs),
    /// Compute information-content features across the benchmark suite.
    Features(commands::features::FeaturesArgs),
    /// Hausdorff coverage of each sampler against a uniform reference.
    Coverage(commands::coverage::CoverageArgs),
    /// Wall-clock cost of sampling or ordering.
    Timing(commands::timing::TimingArgs),
    /// kNN group prediction and permutation feature importance.
    Classify(commands::classify::ClassifyArgs),
    /// Export the benchmark-suite manifest.
    Suite(commands::suite::SuiteArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Sample(args) => commands::sample::run(args),
        Command::Order(args) => commands::order::run(args),
        Command::Features(args) => commands::features::run(args),
        Command::Coverage(args) => commands::coverage::run(args),
        Command::Timing(args) => commands::timing::run(args),
        Command::Classify(args) => commands::classify::run(args),
        Command::Suite(args) => commands::suite::run(args),
    };
    match outcome {
        Ok(0) => ExitCode::SUCCESS,
        Ok(failed_cells) => {
            eprintln!("{failed_cells} cell(s) failed; artifacts for the rest were written");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
