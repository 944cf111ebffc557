//! Information-content landscape features.
//!
//! An ordered sample with fitness values is reduced to a sequence of slope
//! symbols in {-1, 0, +1} at a threshold ε; the entropy of consecutive
//! symbol pairs and the length of the collapsed non-neutral sequence give
//! the five metrics {ε_s, ε_max, ε_ratio, H_max, M₀}. The ε sweep over the
//! configured grid is embarrassingly parallel and runs on rayon.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ordering::dist_sq;
use crate::sampling::OrderedSample;

const LN_6: f64 = 1.791_759_469_228_055;

/// Threshold grid and cut-offs for the feature sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct IcConfig {
    epsilons: Vec<f64>,
    settling_threshold: f64,
    ratio: f64,
}

impl IcConfig {
    /// `epsilons` must be sorted ascending and start at exactly 0;
    /// `settling_threshold` and `ratio` must lie in (0, 1).
    pub fn new(epsilons: Vec<f64>, settling_threshold: f64, ratio: f64) -> Result<Self> {
        if epsilons.first() != Some(&0.0) {
            return Err(Error::Domain("epsilon grid must start at 0".into()));
        }
        if epsilons.windows(2).any(|w| w[0] >= w[1] || w[1].is_nan()) {
            return Err(Error::Domain(
                "epsilon grid must be strictly ascending".into(),
            ));
        }
        if !settling_threshold.is_finite() || settling_threshold <= 0.0 || settling_threshold >= 1.0 {
            return Err(Error::Domain(
                "settling threshold must lie in (0, 1)".into(),
            ));
        }
        if !ratio.is_finite() || ratio <= 0.0 || ratio >= 1.0 {
            return Err(Error::Domain("ratio must lie in (0, 1)".into()));
        }
        Ok(IcConfig {
            epsilons,
            settling_threshold,
            ratio,
        })
    }

    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }

    pub fn settling_threshold(&self) -> f64 {
        self.settling_threshold
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }
}

impl Default for IcConfig {
    /// {0} ∪ 1000 log-spaced thresholds from 1e-5 to 1e15.
    fn default() -> Self {
        let mut eps = Vec::with_capacity(1001);
        eps.push(0.0);
        for k in 0..1000 {
            let exp = -5.0 + 20.0 * k as f64 / 999.0;
            eps.push(10f64.powf(exp));
        }
        IcConfig {
            epsilons: eps,
            settling_threshold: 0.05,
            ratio: 0.5,
        }
    }
}

/// The five information-content metrics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IcFeatures {
    /// log₁₀ of the smallest threshold at which the entropy settles below
    /// the configured cut-off (largest grid value if it never settles).
    pub eps_s: f64,
    /// Threshold attaining the maximum entropy (raw, not log-scaled).
    pub eps_max: f64,
    /// log₁₀ of the smallest threshold at which the partial information
    /// drops to the configured fraction of its ε=0 value.
    pub eps_ratio: f64,
    /// Maximum entropy over the grid, in [0, 1].
    pub h_max: f64,
    /// Partial information at ε = 0, in [0, 1].
    pub m0: f64,
    /// False when the entropy never fell below the settling cut-off and
    /// `eps_s` is the fallback grid maximum.
    pub eps_s_settled: bool,
}

/// Slope-symbol sequence of a sample at threshold `epsilon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence {
    /// Symbols in {-1, 0, +1}, one per retained consecutive pair.
    pub symbols: Vec<i8>,
    /// Consecutive pairs dropped because the points coincided while their
    /// fitness differed (undefined slope).
    pub skipped_pairs: usize,
}

/// Fitness differences per unit Euclidean step between consecutive points.
///
/// Coinciding consecutive points with equal fitness contribute a zero
/// slope (neutrality); with differing fitness the pair is skipped and
/// counted in the second return value.
fn slopes(sample: &OrderedSample) -> Result<(Vec<f64>, usize)> {
    let fitness = sample
        .fitness
        .as_ref()
        .ok_or_else(|| Error::Domain("sample has no fitness values".into()))?;
    if sample.len() < 2 {
        return Err(Error::Domain(
            "slope sequence needs at least two points".into(),
        ));
    }
    let mut out = Vec::with_capacity(sample.len() - 1);
    let mut skipped = 0usize;
    for i in 0..sample.len() - 1 {
        let dist = dist_sq(&sample.points[i], &sample.points[i + 1]).sqrt();
        let dy = fitness[i + 1] - fitness[i];
        if dist > 0.0 {
            out.push(dy / dist);
        } else if dy == 0.0 {
            out.push(0.0);
        } else {
            skipped += 1;
        }
    }
    Ok((out, skipped))
}

fn symbol_of(slope: f64, epsilon: f64) -> i8 {
    if slope > epsilon {
        1
    } else if slope < -epsilon {
        -1
    } else {
        0
    }
}

/// Classify each consecutive slope of the sample at threshold `epsilon`.
pub fn symbol_sequence(sample: &OrderedSample, epsilon: f64) -> Result<SymbolSequence> {
    if epsilon < 0.0 {
        return Err(Error::Domain("epsilon must be non-negative".into()));
    }
    let (slopes, skipped_pairs) = slopes(sample)?;
    Ok(SymbolSequence {
        symbols: slopes.iter().map(|&s| symbol_of(s, epsilon)).collect(),
        skipped_pairs,
    })
}

/// Entropy of consecutive symbol pairs, normalised to [0, 1]:
/// `H = -Σ p_ab · log₆ p_ab` over the six ordered pairs with a ≠ b,
/// where `p_ab` is the pair's frequency among all consecutive pairs.
pub fn entropy_h(symbols: &[i8]) -> Result<f64> {
    if symbols.len() < 2 {
        return Err(Error::Domain(
            "entropy needs at least two symbols".into(),
        ));
    }
    let mut counts = [0u64; 9];
    for w in symbols.windows(2) {
        counts[pair_slot(w[0], w[1])] += 1;
    }
    Ok(entropy_from_counts(&counts, (symbols.len() - 1) as u64))
}

fn pair_slot(a: i8, b: i8) -> usize {
    ((a + 1) * 3 + (b + 1)) as usize
}

fn entropy_from_counts(counts: &[u64; 9], total: u64) -> f64 {
    let mut h = 0.0;
    for (slot, &c) in counts.iter().enumerate() {
        // Diagonal slots hold equal pairs (a == b): excluded from the sum.
        if c == 0 || slot % 4 == 0 {
            continue;
        }
        let p = c as f64 / total as f64;
        h -= p * (p.ln() / LN_6);
    }
    h
}

/// Partial information: drop the neutral symbols, collapse consecutive
/// repeats, and divide the remaining length by the symbol count.
pub fn partial_information(symbols: &[i8]) -> Result<f64> {
    if symbols.is_empty() {
        return Err(Error::Domain(
            "partial information needs at least one symbol".into(),
        ));
    }
    Ok(collapsed_len(symbols) as f64 / symbols.len() as f64)
}

fn collapsed_len(symbols: &[i8]) -> usize {
    let mut len = 0usize;
    let mut last = 0i8;
    for &s in symbols {
        if s != 0 && s != last {
            len += 1;
            last = s;
        }
    }
    len
}

/// Compute the five information-content features of an ordered sample.
pub fn compute_ic_features(sample: &OrderedSample, config: &IcConfig) -> Result<IcFeatures> {
    if !sample.ordered {
        return Err(Error::Contract(
            "information content requires a spatially ordered sample; order it first".into(),
        ));
    }
    if sample.len() < 3 {
        return Err(Error::Domain(
            "information content needs at least three points".into(),
        ));
    }
    let (slopes, _skipped) = slopes(sample)?;
    if slopes.len() < 2 {
        return Err(Error::Domain(
            "too few usable consecutive pairs for information content".into(),
        ));
    }

    // One pass per threshold; independent, so swept in parallel.
    let sweep: Vec<(f64, f64)> = config
        .epsilons
        .par_iter()
        .map(|&eps| h_and_m_at(&slopes, eps))
        .collect();

    let m0 = sweep[0].1;
    let mut h_max = f64::NEG_INFINITY;
    let mut eps_max = 0.0;
    for (&eps, &(h, _)) in config.epsilons.iter().zip(&sweep) {
        if h > h_max {
            h_max = h;
            eps_max = eps;
        }
    }

    let s = config.settling_threshold;
    let mut eps_s = None;
    let mut eps_ratio = None;
    for (&eps, &(h, m)) in config.epsilons.iter().zip(&sweep) {
        if eps <= 0.0 {
            continue;
        }
        if eps_s.is_none() && h < s {
            eps_s = Some(eps);
        }
        if eps_ratio.is_none() && (m0 == 0.0 || m <= config.ratio * m0) {
            eps_ratio = Some(eps);
        }
        if eps_s.is_some() && eps_ratio.is_some() {
            break;
        }
    }
    let grid_top = *config.epsilons.last().expect("non-empty grid");
    let eps_s_settled = eps_s.is_some();

    Ok(IcFeatures {
        eps_s: eps_s.unwrap_or(grid_top).log10(),
        eps_max,
        eps_ratio: eps_ratio.unwrap_or(grid_top).log10(),
        h_max,
        m0,
        eps_s_settled,
    })
}

fn h_and_m_at(slopes: &[f64], eps: f64) -> (f64, f64) {
    let mut counts = [0u64; 9];
    let mut prev: Option<i8> = None;
    let mut m_len = 0usize;
    let mut last_nonzero = 0i8;
    for &sl in slopes {
        let sym = symbol_of(sl, eps);
        if let Some(p) = prev {
            counts[pair_slot(p, sym)] += 1;
        }
        prev = Some(sym);
        if sym != 0 && sym != last_nonzero {
            m_len += 1;
            last_nonzero = sym;
        }
    }
    let h = entropy_from_counts(&counts, (slopes.len() - 1) as u64);
    (h, m_len as f64 / slopes.len() as f64)
}
