use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use hilbert_ela::io::{read_sample_csv, write_sample_csv, write_steps_csv, Provenance};
use hilbert_ela::ordering::step_sizes;
use hilbert_ela::sampling::{OrderedSample, SearchSpace};

use crate::commands::ordering_permutation;
use crate::config::{short_hash, OrderingKind};

/// Reorder a sample CSV and emit step-size diagnostics.
#[derive(Debug, Args)]
pub struct OrderArgs {
    /// Input sample CSV (`x0..x{d-1}[,y]`).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    ordering: OrderingKind,
    /// Seed for the random ordering.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Search-space bounds used for Hilbert quantisation.
    #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
    lower: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    upper: f64,
    /// Reordered sample CSV.
    #[arg(long)]
    out: PathBuf,
    /// Step-size CSV (`step_index,distance`).
    #[arg(long)]
    steps_out: Option<PathBuf>,
}

pub fn run(args: &OrderArgs) -> Result<usize> {
    let (points, fitness) = read_sample_csv(&args.input)?;
    let d = points.first().map_or(0, Vec::len);
    let space = SearchSpace::new(vec![args.lower; d], vec![args.upper; d])?;
    let mut sample = OrderedSample::new(points, false);
    if let Some(f) = fitness {
        sample = sample.with_fitness(f)?;
    }

    let perm = ordering_permutation(args.ordering, &sample.points, &space, args.seed)?;
    let ordered = sample.permuted(&perm, true);

    let hash = short_hash(&format!(
        "order;{};input={};bounds=({},{})",
        args.ordering.label(),
        args.input.display(),
        args.lower,
        args.upper
    ));
    let provenance = Provenance::new(hash, args.seed);
    write_sample_csv(&args.out, &ordered, &provenance)?;
    if let Some(steps_path) = &args.steps_out {
        write_steps_csv(steps_path, &step_sizes(&ordered)?, &provenance)?;
    }
    println!(
        "reordered {} points with {} ordering into {}",
        ordered.len(),
        args.ordering.label(),
        args.out.display()
    );
    Ok(0)
}
