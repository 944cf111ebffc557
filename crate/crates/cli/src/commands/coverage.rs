use anyhow::Result;
use clap::Args;
use hilbert_ela::coverage::{average_hausdorff_distance, friedman_mean_ranks, CoverageResult};
use hilbert_ela::io::{
    write_coverage_csv, write_coverage_summary_csv, write_rank_csv, Provenance,
};
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::{uniform_sample, SearchSpace};
use rayon::prelude::*;

use crate::commands::generate_sample;
use crate::config::ConfigArgs;

/// Measure search-space coverage of each sampler against a uniform
/// reference set, and rank the samplers.
#[derive(Debug, Args)]
pub struct CoverageArgs {
    #[command(flatten)]
    config: ConfigArgs,
}

pub fn run(args: &CoverageArgs) -> Result<usize> {
    let cfg = args.config.resolve()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let provenance = Provenance::new(cfg.hash(), cfg.seed);

    struct Cell {
        dim: usize,
        n: usize,
        run: usize,
        seed: u64,
    }
    let mut cells = Vec::new();
    for &dim in &cfg.dimensions {
        for &mult in &cfg.sample_size_multipliers {
            let n = mult * dim;
            for run in 0..cfg.repetitions {
                let seed = derive_seed(
                    derive_seed(derive_seed(cfg.seed, dim as u64), n as u64),
                    run as u64,
                );
                cells.push(Cell { dim, n, run, seed });
            }
        }
    }

    let samplers = cfg.samplers.clone();
    let lower = cfg.lower;
    let upper = cfg.upper;
    let per_cell: Vec<Result<Vec<CoverageResult>, String>> = cells
        .par_iter()
        .map(|cell| {
            let space = SearchSpace::new(vec![lower; cell.dim], vec![upper; cell.dim])
                .map_err(|e| e.to_string())?;
            let mut reference_rng = rng_from_seed(derive_seed(cell.seed, 99));
            let reference = uniform_sample(&space, cell.n, &mut reference_rng)
                .map_err(|e| e.to_string())?;
            let mut rows = Vec::with_capacity(samplers.len());
            for &sampler in &samplers {
                let sample =
                    generate_sample(sampler, &space, cell.n, derive_seed(cell.seed, sampler.tag()))
                        .map_err(|e| e.to_string())?;
                let hd = average_hausdorff_distance(&sample.points, &reference.points)
                    .map_err(|e| e.to_string())?;
                rows.push(CoverageResult {
                    dimension: cell.dim,
                    sample_size: cell.n,
                    sampler: sampler.label().into(),
                    run: cell.run,
                    hausdorff: hd,
                });
            }
            Ok(rows)
        })
        .collect();

    let mut rows = Vec::new();
    let mut failures = 0usize;
    for r in per_cell {
        match r {
            Ok(mut cell_rows) => rows.append(&mut cell_rows),
            Err(e) => {
                eprintln!("failed cell: {e}");
                failures += 1;
            }
        }
    }

    write_coverage_csv(&cfg.output_dir.join("coverage.csv"), &rows, &provenance)?;

    // Per-(d, n, sampler) mean and standard deviation, Table-2 shaped.
    let mut summary = Vec::new();
    for &dim in &cfg.dimensions {
        for &mult in &cfg.sample_size_multipliers {
            let n = mult * dim;
            for &sampler in &cfg.samplers {
                let values: Vec<f64> = rows
                    .iter()
                    .filter(|r| {
                        r.dimension == dim && r.sample_size == n && r.sampler == sampler.label()
                    })
                    .map(|r| r.hausdorff)
                    .collect();
                if values.is_empty() {
                    continue;
                }
                let mean = values.iter().sum::<f64>() / values.len() as f64;
                let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                    / (values.len() as f64 - 1.0).max(1.0);
                summary.push((dim, n, sampler.label().to_string(), mean, var.sqrt()));
            }
        }
    }
    write_coverage_summary_csv(
        &cfg.output_dir.join("coverage_summary.csv"),
        &summary,
        &provenance,
    )?;

    // Friedman mean ranks: one block per (d, n, run), one column per sampler.
    let mut blocks = Vec::new();
    for &dim in &cfg.dimensions {
        for &mult in &cfg.sample_size_multipliers {
            let n = mult * dim;
            for run in 0..cfg.repetitions {
                let block: Vec<f64> = cfg
                    .samplers
                    .iter()
                    .filter_map(|s| {
                        rows.iter()
                            .find(|r| {
                                r.dimension == dim
                                    && r.sample_size == n
                                    && r.run == run
                                    && r.sampler == s.label()
                            })
                            .map(|r| r.hausdorff)
                    })
                    .collect();
                if block.len() == cfg.samplers.len() {
                    blocks.push(block);
                }
            }
        }
    }
    if !blocks.is_empty() && cfg.samplers.len() >= 2 {
        let ranks = friedman_mean_ranks(&blocks)?;
        let named: Vec<(String, f64)> = cfg
            .samplers
            .iter()
            .zip(ranks)
            .map(|(s, r)| (s.label().to_string(), r))
            .collect();
        write_rank_csv(&cfg.output_dir.join("coverage_ranks.csv"), &named, &provenance)?;
    }

    println!(
        "wrote {} coverage rows to {} ({failures} failed cells)",
        rows.len(),
        cfg.output_dir.display()
    );
    Ok(failures)
}
