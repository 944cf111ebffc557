use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use hilbert_ela::classify::{evaluate_accuracy, holdout_split, permutation_importance, Dataset};
use hilbert_ela::io::{
    read_feature_csv, write_accuracy_csv, write_importance_csv, Provenance, IC_FEATURE_NAMES,
};
use hilbert_ela::rng::{derive_seed, rng_from_seed};

use crate::config::ConfigArgs;

/// Predict the problem group from feature rows with kNN, per
/// sampler/ordering grouping, and measure permutation feature importance.
#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Feature CSV produced by the `features` subcommand. Defaults to
    /// `<output_dir>/features.csv`.
    #[arg(long)]
    features: Option<PathBuf>,
    /// Neighbour count.
    #[arg(long)]
    k: Option<usize>,
}

pub fn run(args: &ClassifyArgs) -> Result<usize> {
    let cfg = args.config.resolve()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let provenance = Provenance::new(cfg.hash(), cfg.seed);
    let k = args.k.unwrap_or(cfg.knn_k);

    let path = args
        .features
        .clone()
        .unwrap_or_else(|| cfg.output_dir.join("features.csv"));
    let rows = read_feature_csv(&path)
        .with_context(|| format!("reading feature rows from {}", path.display()))?;

    // Group rows by (sampler, ordering).
    let mut groupings: Vec<(String, String)> = Vec::new();
    for r in &rows {
        let key = (r.sampler.clone(), r.ordering.clone());
        if !groupings.contains(&key) {
            groupings.push(key);
        }
    }

    let names: Vec<String> = IC_FEATURE_NAMES.iter().map(|s| s.to_string()).collect();
    let mut accuracy_rows = Vec::new();
    let mut failures = 0usize;
    for (grouping_idx, (sampler, ordering)) in groupings.iter().enumerate() {
        let records: Vec<_> = rows
            .iter()
            .filter(|r| &r.sampler == sampler && &r.ordering == ordering)
            .map(|r| r.to_record())
            .collect();
        let outcome = (|| -> Result<()> {
            let data = Dataset::new(names.clone(), records)?;
            let (train, test) = holdout_split(&data, &cfg.holdout_instances)?;
            let accuracy = evaluate_accuracy(&train, &test, k)?;
            accuracy_rows.push((sampler.clone(), ordering.clone(), accuracy));

            let mut rng = rng_from_seed(derive_seed(cfg.seed, grouping_idx as u64));
            let importances = permutation_importance(
                &train,
                &test,
                k,
                cfg.importance_repetitions,
                &mut rng,
            )?;
            let file = cfg
                .output_dir
                .join(format!("importance_{sampler}_{ordering}.csv"));
            write_importance_csv(&file, &importances, &provenance)?;
            Ok(())
        })();
        if let Err(e) = outcome {
            eprintln!("failed grouping {sampler}/{ordering}: {e}");
            failures += 1;
        }
    }

    let acc_path = cfg.output_dir.join("accuracy.csv");
    write_accuracy_csv(&acc_path, &accuracy_rows, &provenance)?;
    println!(
        "wrote {} accuracy rows to {} ({failures} failed groupings)",
        accuracy_rows.len(),
        acc_path.display()
    );
    Ok(failures)
}
