use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use hilbert_ela::benchmarks;
use hilbert_ela::io::{write_sample_csv, Provenance};
use hilbert_ela::rng::rng_from_seed;
use hilbert_ela::sampling::{self, SearchSpace, StochasticityStrategy};

use crate::config::{short_hash, SamplerKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum StochKind {
    VertexGaussian,
    EdgeUniform,
}

/// Generate a sample and write it as CSV.
#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    sampler: SamplerKind,
    /// Search-space dimension.
    #[arg(long)]
    dim: usize,
    /// Number of points.
    #[arg(short, long)]
    n: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
    lower: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    upper: f64,
    /// Stochasticity strategy of the Hilbert sampler.
    #[arg(long, value_enum, default_value = "vertex-gaussian")]
    strategy: StochKind,
    /// Noise standard deviation in grid units (vertex-gaussian).
    #[arg(long, default_value_t = 0.3)]
    sigma: f64,
    /// Maximum per-coordinate step of the random walk.
    #[arg(long, default_value_t = 1.0)]
    max_step: f64,
    /// Evaluate this benchmark function on the sample and attach `y`.
    #[arg(long)]
    function: Option<u32>,
    /// Benchmark instance used with --function.
    #[arg(long, default_value_t = 1)]
    instance: u32,
    #[arg(long)]
    out: PathBuf,
}

pub fn run(args: &SampleArgs) -> Result<usize> {
    let space = SearchSpace::new(vec![args.lower; args.dim], vec![args.upper; args.dim])?;
    let mut rng = rng_from_seed(args.seed);
    let mut sample = match args.sampler {
        SamplerKind::Hilbert => {
            let strategy = match args.strategy {
                StochKind::VertexGaussian => StochasticityStrategy::VertexGaussian {
                    sigma: args.sigma,
                },
                StochKind::EdgeUniform => StochasticityStrategy::EdgeUniform,
            };
            sampling::hilbert_sample(&space, args.n, strategy, &mut rng)?
        }
        SamplerKind::Lhs => sampling::lhs_sample(&space, args.n, &mut rng)?,
        SamplerKind::RandomWalk => {
            sampling::random_walk_sample(&space, args.n, args.max_step, &mut rng)?
        }
        SamplerKind::Uniform => sampling::uniform_sample(&space, args.n, &mut rng)?,
    };

    if let Some(id) = args.function {
        let funcs = benchmarks::suite(args.dim, &[args.instance])?;
        let f = funcs
            .iter()
            .find(|f| f.id() == id)
            .with_context(|| format!("no function with id {id} in the suite"))?;
        sample = sample.evaluated(|x| f.evaluate(x).expect("dimension checked"));
    }

    let hash = short_hash(&format!(
        "sample;{};d={};n={};bounds=({},{});strategy={:?};sigma={};max_step={};function={:?};instance={}",
        args.sampler.label(),
        args.dim,
        args.n,
        args.lower,
        args.upper,
        args.strategy,
        args.sigma,
        args.max_step,
        args.function,
        args.instance
    ));
    write_sample_csv(&args.out, &sample, &Provenance::new(hash, args.seed))?;
    println!(
        "wrote {} points ({} sampler) to {}",
        sample.len(),
        args.sampler.label(),
        args.out.display()
    );
    Ok(0)
}
