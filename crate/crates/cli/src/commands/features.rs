use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use hilbert_ela::benchmarks;
use hilbert_ela::features::{compute_ic_features, IcConfig};
use hilbert_ela::io::{read_sample_csv, write_feature_csv, FeatureRow, Provenance};
use hilbert_ela::rng::derive_seed;
use hilbert_ela::sampling::{OrderedSample, SearchSpace};
use rayon::prelude::*;

use crate::commands::{generate_sample, ordering_permutation};
use crate::config::{ConfigArgs, OrderingKind, SamplerKind};

/// Compute information-content features, either sweeping the benchmark
/// suite per the experiment config, or for one externally produced
/// `(X, y)` sample CSV.
#[derive(Debug, Args)]
pub struct FeaturesArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Ingest this `(X, y)` sample CSV instead of sweeping the suite.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Ordering applied to the ingested sample (`none` trusts the row
    /// order as already spatially meaningful).
    #[arg(long, value_enum, default_value = "none")]
    ordering: OrderingKind,
    /// Provenance columns for the ingested row.
    #[arg(long, default_value_t = 0)]
    function: u32,
    #[arg(long, default_value_t = 0)]
    group: u8,
    #[arg(long, default_value_t = 0)]
    instance: u32,
    #[arg(long, default_value = "external")]
    sampler_label: String,
}

pub fn run(args: &FeaturesArgs) -> Result<usize> {
    let cfg = args.config.resolve()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let provenance = Provenance::new(cfg.hash(), cfg.seed);
    let out_path = cfg.output_dir.join("features.csv");

    if let Some(input) = &args.input {
        let row = ingest(args, input, cfg.lower, cfg.upper, cfg.seed)?;
        write_feature_csv(&out_path, &[row], &provenance)?;
        println!("wrote 1 feature row to {}", out_path.display());
        return Ok(0);
    }

    // One sample X per (dimension, size, repetition, sampler), shared
    // across orderings and all suite functions.
    struct Cell {
        dim: usize,
        n: usize,
        rep: usize,
        sampler: SamplerKind,
        seed: u64,
    }
    let mut cells = Vec::new();
    for &dim in &cfg.dimensions {
        for &mult in &cfg.sample_size_multipliers {
            let n = mult * dim;
            for rep in 0..cfg.repetitions {
                for &sampler in &cfg.samplers {
                    let seed = derive_seed(
                        derive_seed(derive_seed(cfg.seed, dim as u64), n as u64),
                        rep as u64 * 100 + sampler.tag(),
                    );
                    cells.push(Cell {
                        dim,
                        n,
                        rep,
                        sampler,
                        seed,
                    });
                }
            }
        }
    }

    let ic_config = IcConfig::default();
    let results: Vec<(Vec<FeatureRow>, Vec<String>)> = cells
        .par_iter()
        .map(|cell| sweep_cell(cell.dim, cell.n, cell.rep, cell.sampler, cell.seed, &cfg_view(&cfg), &ic_config))
        .collect();

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (mut cell_rows, mut cell_failures) in results {
        rows.append(&mut cell_rows);
        failures.append(&mut cell_failures);
    }
    write_feature_csv(&out_path, &rows, &provenance)?;
    println!(
        "wrote {} feature rows to {} ({} failed cells)",
        rows.len(),
        out_path.display(),
        failures.len()
    );
    for f in &failures {
        eprintln!("failed: {f}");
    }
    Ok(failures.len())
}

struct CfgView {
    lower: f64,
    upper: f64,
    orderings: Vec<OrderingKind>,
    instances: Vec<u32>,
}

fn cfg_view(cfg: &crate::config::ExperimentConfig) -> CfgView {
    CfgView {
        lower: cfg.lower,
        upper: cfg.upper,
        orderings: cfg.orderings.clone(),
        instances: cfg.instances.clone(),
    }
}

fn sweep_cell(
    dim: usize,
    n: usize,
    rep: usize,
    sampler: SamplerKind,
    seed: u64,
    cfg: &CfgView,
    ic_config: &IcConfig,
) -> (Vec<FeatureRow>, Vec<String>) {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let context = |what: &str| format!("d={dim} n={n} rep={rep} sampler={}: {what}", sampler.label());

    let space = match SearchSpace::new(vec![cfg.lower; dim], vec![cfg.upper; dim]) {
        Ok(s) => s,
        Err(e) => return (rows, vec![context(&e.to_string())]),
    };
    let sample = match generate_sample(sampler, &space, n, seed) {
        Ok(s) => s,
        Err(e) => return (rows, vec![context(&e.to_string())]),
    };

    // Pre-ordered samplers keep their own order; unordered ones get every
    // configured ordering.
    let orderings: Vec<OrderingKind> = if sampler.pre_ordered() {
        vec![OrderingKind::None]
    } else {
        cfg.orderings.clone()
    };
    let mut perms = Vec::new();
    for &ordering in &orderings {
        match crate::commands::ordering_permutation(
            ordering,
            &sample.points,
            &space,
            derive_seed(seed, ordering.tag()),
        ) {
            Ok(p) => perms.push((ordering, p)),
            Err(e) => failures.push(context(&format!("{} ordering: {e}", ordering.label()))),
        }
    }

    let functions = match benchmarks::suite(dim, &cfg.instances) {
        Ok(f) => f,
        Err(e) => {
            failures.push(context(&e.to_string()));
            return (rows, failures);
        }
    };
    for function in &functions {
        let evaluated = sample
            .clone()
            .evaluated(|x| function.evaluate(x).expect("dimension checked"));
        for (ordering, perm) in &perms {
            let ordered = evaluated.permuted(perm, true);
            match compute_ic_features(&ordered, ic_config) {
                Ok(features) => rows.push(FeatureRow {
                    function: function.id(),
                    group: function.group(),
                    instance: function.instance(),
                    dim,
                    sampler: sampler.label().into(),
                    ordering: ordering.label().into(),
                    seed,
                    features,
                }),
                Err(e) => failures.push(context(&format!(
                    "function {} instance {} {}: {e}",
                    function.id(),
                    function.instance(),
                    ordering.label()
                ))),
            }
        }
    }
    (rows, failures)
}

fn ingest(
    args: &FeaturesArgs,
    input: &std::path::Path,
    lower: f64,
    upper: f64,
    seed: u64,
) -> Result<FeatureRow> {
    let (points, fitness) = read_sample_csv(input)?;
    let Some(fitness) = fitness else {
        bail!("{}: feature extraction needs a fitness column y", input.display());
    };
    let d = points.first().map_or(0, Vec::len);
    let space = SearchSpace::new(vec![lower; d], vec![upper; d])?;
    let sample = OrderedSample::new(points, false).with_fitness(fitness)?;
    let perm = ordering_permutation(args.ordering, &sample.points, &space, seed)?;
    let ordered = sample.permuted(&perm, true);
    let features = compute_ic_features(&ordered, &IcConfig::default())
        .with_context(|| format!("computing features for {}", input.display()))?;
    Ok(FeatureRow {
        function: args.function,
        group: args.group,
        instance: args.instance,
        dim: d,
        sampler: args.sampler_label.clone(),
        ordering: args.ordering.label().into(),
        seed,
        features,
    })
}
