use std::time::Instant;

use anyhow::Result;
use clap::Args;
use hilbert_ela::io::{write_timing_csv, Provenance};
use hilbert_ela::rng::derive_seed;
use hilbert_ela::sampling::{lhs_sample, SearchSpace};

use crate::commands::{generate_sample, ordering_permutation};
use crate::config::ConfigArgs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TimingMode {
    /// Time sample generation per sampler.
    Sampling,
    /// Time the ordering of a pre-generated Latin hypercube sample.
    Ordering,
}

/// Wall-clock cost of sampling or ordering, per strategy and cell.
/// Runs strictly sequentially to keep measurements honest; function
/// evaluation and file I/O are excluded.
#[derive(Debug, Args)]
pub struct TimingArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[arg(long, value_enum)]
    mode: TimingMode,
}

pub fn run(args: &TimingArgs) -> Result<usize> {
    let cfg = args.config.resolve()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let provenance = Provenance::new(cfg.hash(), cfg.seed);

    let mut rows: Vec<(String, String, usize, usize, usize, f64)> = Vec::new();
    for &dim in &cfg.dimensions {
        let space = SearchSpace::new(vec![cfg.lower; dim], vec![cfg.upper; dim])?;
        for &mult in &cfg.sample_size_multipliers {
            let n = mult * dim;
            for run in 0..cfg.repetitions {
                let cell_seed = derive_seed(
                    derive_seed(derive_seed(cfg.seed, dim as u64), n as u64),
                    run as u64,
                );
                match args.mode {
                    TimingMode::Sampling => {
                        for &sampler in &cfg.samplers {
                            let seed = derive_seed(cell_seed, sampler.tag());
                            let start = Instant::now();
                            let sample = generate_sample(sampler, &space, n, seed)?;
                            let seconds = start.elapsed().as_secs_f64();
                            assert_eq!(sample.len(), n);
                            rows.push((
                                "sampling".into(),
                                sampler.label().into(),
                                dim,
                                n,
                                run,
                                seconds,
                            ));
                        }
                    }
                    TimingMode::Ordering => {
                        let sample = lhs_sample(
                            &space,
                            n,
                            &mut hilbert_ela::rng::rng_from_seed(cell_seed),
                        )?;
                        for &ordering in &cfg.orderings {
                            let seed = derive_seed(cell_seed, ordering.tag());
                            let start = Instant::now();
                            let perm =
                                ordering_permutation(ordering, &sample.points, &space, seed)?;
                            let seconds = start.elapsed().as_secs_f64();
                            assert_eq!(perm.len(), n);
                            rows.push((
                                "ordering".into(),
                                ordering.label().into(),
                                dim,
                                n,
                                run,
                                seconds,
                            ));
                        }
                    }
                }
            }
        }
    }

    let path = cfg.output_dir.join("timing.csv");
    write_timing_csv(&path, &rows, &provenance)?;
    println!("wrote {} timing rows to {}", rows.len(), path.display());
    Ok(0)
}
