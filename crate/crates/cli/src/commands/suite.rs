use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use hilbert_ela::benchmarks;
use hilbert_ela::io::{write_manifest_csv, Provenance};

use crate::config::short_hash;

/// Export the benchmark-suite manifest (`id,name,group,dimension,instance`).
#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
    instances: Vec<u32>,
    #[arg(long)]
    out: PathBuf,
}

pub fn run(args: &SuiteArgs) -> Result<usize> {
    let functions = benchmarks::suite(args.dim, &args.instances)?;
    let hash = short_hash(&format!("suite;d={};instances={:?}", args.dim, args.instances));
    write_manifest_csv(&args.out, &functions, &Provenance::new(hash, 0))?;
    println!(
        "wrote manifest of {} functions to {}",
        functions.len(),
        args.out.display()
    );
    Ok(0)
}
