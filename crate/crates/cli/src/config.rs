//! Experiment configuration: a TOML file plus flag overrides.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Deserialize;
use sha2::{Digest, Sha256};

/// Sampling strategies selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SamplerKind {
    Hilbert,
    Lhs,
    RandomWalk,
    Uniform,
}

impl SamplerKind {
    pub fn label(self) -> &'static str {
        match self {
            SamplerKind::Hilbert => "hilbert",
            SamplerKind::Lhs => "lhs",
            SamplerKind::RandomWalk => "random_walk",
            SamplerKind::Uniform => "uniform",
        }
    }

    /// Stable tag for seed derivation.
    pub fn tag(self) -> u64 {
        match self {
            SamplerKind::Hilbert => 1,
            SamplerKind::Lhs => 2,
            SamplerKind::RandomWalk => 3,
            SamplerKind::Uniform => 4,
        }
    }

    /// Whether the sampler already emits a spatially ordered sequence.
    pub fn pre_ordered(self) -> bool {
        matches!(self, SamplerKind::Hilbert | SamplerKind::RandomWalk)
    }
}

/// Ordering strategies selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OrderingKind {
    Hilbert,
    Nn,
    Random,
    /// Keep the sample order as-is (for pre-ordered samples).
    None,
}

impl OrderingKind {
    pub fn label(self) -> &'static str {
        match self {
            OrderingKind::Hilbert => "hilbert",
            OrderingKind::Nn => "nn",
            OrderingKind::Random => "random",
            OrderingKind::None => "none",
        }
    }

    pub fn tag(self) -> u64 {
        match self {
            OrderingKind::Hilbert => 11,
            OrderingKind::Nn => 12,
            OrderingKind::Random => 13,
            OrderingKind::None => 14,
        }
    }
}

/// Resolved experiment configuration.
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub dimensions: Vec<usize>,
    pub sample_size_multipliers: Vec<usize>,
    pub repetitions: usize,
    pub seed: u64,
    pub samplers: Vec<SamplerKind>,
    pub orderings: Vec<OrderingKind>,
    pub instances: Vec<u32>,
    pub output_dir: PathBuf,
    pub lower: f64,
    pub upper: f64,
    pub knn_k: usize,
    pub importance_repetitions: usize,
    pub holdout_instances: Vec<u32>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            dimensions: vec![5],
            sample_size_multipliers: vec![100],
            repetitions: 30,
            seed: 42,
            samplers: vec![SamplerKind::Hilbert, SamplerKind::Lhs, SamplerKind::RandomWalk],
            orderings: vec![OrderingKind::Hilbert, OrderingKind::Nn, OrderingKind::Random],
            instances: vec![1, 2, 3, 4, 5],
            output_dir: PathBuf::from("out"),
            lower: -5.0,
            upper: 5.0,
            knn_k: 5,
            importance_repetitions: 10,
            holdout_instances: vec![4, 5],
        }
    }
}

/// Flags shared by the experiment subcommands; every flag overrides the
/// corresponding config-file field.
#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    /// TOML configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Dimensions to sweep.
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Sample-size multipliers (n = mult x d); allowed: 100, 316, 1000.
    #[arg(long, value_delimiter = ',')]
    pub mults: Option<Vec<usize>>,
    /// Independent repetitions per cell.
    #[arg(long)]
    pub reps: Option<usize>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Samplers to include.
    #[arg(long, value_delimiter = ',')]
    pub samplers: Option<Vec<SamplerKind>>,
    /// Orderings to include.
    #[arg(long, value_delimiter = ',')]
    pub orderings: Option<Vec<OrderingKind>>,
    /// Benchmark instances to materialise.
    #[arg(long, value_delimiter = ',')]
    pub instances: Option<Vec<u32>>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl ConfigArgs {
    pub fn resolve(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading config {}", path.display()))?;
                toml::from_str(&text)
                    .with_context(|| format!("parsing config {}", path.display()))?
            }
            None => ExperimentConfig::default(),
        };
        if let Some(v) = &self.dims {
            cfg.dimensions = v.clone();
        }
        if let Some(v) = &self.mults {
            cfg.sample_size_multipliers = v.clone();
        }
        if let Some(v) = self.reps {
            cfg.repetitions = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = &self.samplers {
            cfg.samplers = v.clone();
        }
        if let Some(v) = &self.orderings {
            cfg.orderings = v.clone();
        }
        if let Some(v) = &self.instances {
            cfg.instances = v.clone();
        }
        if let Some(v) = &self.out {
            cfg.output_dir = v.clone();
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dimensions.is_empty()
            || self.sample_size_multipliers.is_empty()
            || self.samplers.is_empty()
            || self.orderings.is_empty()
            || self.instances.is_empty()
        {
            bail!("dimensions, multipliers, samplers, orderings and instances must be non-empty");
        }
        if self.repetitions < 1 {
            bail!("repetitions must be at least 1");
        }
        for &m in &self.sample_size_multipliers {
            if ![100, 316, 1000].contains(&m) {
                bail!("sample size multiplier {m} not in {{100, 316, 1000}}");
            }
        }
        if !self.lower.is_finite() || !self.upper.is_finite() || self.lower >= self.upper {
            bail!("lower bound must be below upper bound");
        }
        Ok(())
    }

    /// Short stable hash of the resolved configuration, for provenance.
    pub fn hash(&self) -> String {
        let mut canon = String::new();
        let _ = write!(
            canon,
            "dims={:?};mults={:?};reps={};seed={};samplers={:?};orderings={:?};instances={:?};bounds=({},{});k={};imp_reps={};holdout={:?}",
            self.dimensions,
            self.sample_size_multipliers,
            self.repetitions,
            self.seed,
            self.samplers.iter().map(|s| s.label()).collect::<Vec<_>>(),
            self.orderings.iter().map(|o| o.label()).collect::<Vec<_>>(),
            self.instances,
            self.lower,
            self.upper,
            self.knn_k,
            self.importance_repetitions,
            self.holdout_instances,
        );
        short_hash(&canon)
    }
}

/// First 12 hex characters of the SHA-256 of `text`.
pub fn short_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
}
