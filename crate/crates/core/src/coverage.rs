//! Search-space coverage via Hausdorff distance, and Friedman mean ranks
//! for comparing strategies across experiment blocks.

use crate::error::{Error, Result};
use crate::ordering::dist_sq;

/// One coverage measurement: Hausdorff distance of a sampler's output to
/// a uniform reference set.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageResult {
    pub dimension: usize,
    pub sample_size: usize,
    pub sampler: String,
    pub run: usize,
    pub hausdorff: f64,
}

/// Hausdorff distance between two point sets (Euclidean):
/// `max(sup_a inf_b ‖a-b‖, sup_b inf_a ‖a-b‖)`.
pub fn hausdorff_distance(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<f64> {
    validate_sets(a, b)?;
    Ok(directed_sq(a, b).max(directed_sq(b, a)).sqrt())
}

/// Averaged Hausdorff distance: like [`hausdorff_distance`] but with the
/// supremum in each direction replaced by the mean of the point-wise
/// nearest-neighbour distances. Less extreme-value noise than the classic
/// form, which is what makes sampler comparisons stable; the coverage
/// experiments use this variant.
pub fn average_hausdorff_distance(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<f64> {
    validate_sets(a, b)?;
    Ok(directed_mean(a, b).max(directed_mean(b, a)))
}

fn validate_sets(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain(
            "hausdorff distance needs two non-empty sets".into(),
        ));
    }
    let d = a[0].len();
    if a.iter().chain(b.iter()).any(|p| p.len() != d) {
        return Err(Error::Domain(
            "hausdorff distance needs points of equal dimension".into(),
        ));
    }
    Ok(())
}

fn directed_mean(from: &[Vec<f64>], to: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for p in from {
        let mut cmin = f64::INFINITY;
        for q in to {
            let d2 = dist_sq(p, q);
            if d2 < cmin {
                cmin = d2;
            }
        }
        total += cmin.sqrt();
    }
    total / from.len() as f64
}

// Directed squared distance with the classic early break: once a
// candidate's running minimum falls below the current maximum it cannot
// contribute, so the inner scan stops.
fn directed_sq(from: &[Vec<f64>], to: &[Vec<f64>]) -> f64 {
    let mut cmax = 0.0f64;
    for p in from {
        let mut cmin = f64::INFINITY;
        for q in to {
            let d2 = dist_sq(p, q);
            if d2 < cmax {
                cmin = d2;
                break;
            }
            if d2 < cmin {
                cmin = d2;
            }
        }
        if cmin > cmax {
            cmax = cmin;
        }
    }
    cmax
}

/// Friedman mean ranks. Each row is one block of competing measurements
/// (one column per strategy); strategies are ranked ascending within each
/// row (rank 1 = smallest, ties averaged) and ranks are averaged per
/// column. Lower is better.
pub fn friedman_mean_ranks(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    if rows.is_empty() {
        return Err(Error::Domain("rank matrix has no rows".into()));
    }
    let k = rows[0].len();
    if k < 2 {
        return Err(Error::Domain("ranking needs at least two columns".into()));
    }
    let mut sums = vec![0.0; k];
    for row in rows {
        if row.len() != k {
            return Err(Error::Domain("rank matrix rows have unequal length".into()));
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("rank matrix contains missing cells".into()));
        }
        for (col, rank) in row_ranks(row) {
            sums[col] += rank;
        }
    }
    Ok(sums.into_iter().map(|s| s / rows.len() as f64).collect())
}

fn row_ranks(row: &[f64]) -> Vec<(usize, f64)> {
    let mut idx: Vec<usize> = (0..row.len()).collect();
    idx.sort_by(|&a, &b| row[a].partial_cmp(&row[b]).expect("finite values"));
    let mut out = Vec::with_capacity(row.len());
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && row[idx[j + 1]] == row[idx[i]] {
            j += 1;
        }
        // Positions i..=j share the average of ranks i+1..=j+1.
        let rank = (i + j + 2) as f64 / 2.0;
        for &col in &idx[i..=j] {
            out.push((col, rank));
        }
        i = j + 1;
    }
    out
}
