//! Samplers for bounded continuous search spaces: Hilbert-curve,
//! Latin hypercube, random-walk, and uniform-random strategies.
//!
//! All samplers are deterministic given an explicit generator, and every
//! emitted point lies inside the search space. Hilbert and random-walk
//! samples are spatially ordered (`ordered = true`); Latin hypercube and
//! uniform samples are not.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::hilbert::{self, CurveParams};

/// Axis-aligned box `[lower, upper]` in `d` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Domain(
                "search space bounds must be non-empty and of equal length".into(),
            ));
        }
        if lower
            .iter()
            .zip(&upper)
            .any(|(l, u)| !l.is_finite() || !u.is_finite() || l >= u)
        {
            return Err(Error::Domain(
                "every lower bound must be finite and strictly below its upper bound".into(),
            ));
        }
        Ok(SearchSpace { lower, upper })
    }

    /// The cube `[lo, hi]^d`.
    pub fn cube(d: usize, lo: f64, hi: f64) -> Result<Self> {
        SearchSpace::new(vec![lo; d], vec![hi; d])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| v >= l && v <= u)
    }

    fn width(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }
}

/// A point sequence, optionally paired with fitness values. The `ordered`
/// flag records whether the sequence order is spatially meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSample {
    pub points: Vec<Vec<f64>>,
    pub fitness: Option<Vec<f64>>,
    pub ordered: bool,
}

impl OrderedSample {
    pub fn new(points: Vec<Vec<f64>>, ordered: bool) -> Self {
        OrderedSample {
            points,
            fitness: None,
            ordered,
        }
    }

    pub fn with_fitness(mut self, fitness: Vec<f64>) -> Result<Self> {
        if fitness.len() != self.points.len() {
            return Err(Error::Domain(format!(
                "fitness length {} does not match point count {}",
                fitness.len(),
                self.points.len()
            )));
        }
        self.fitness = Some(fitness);
        Ok(self)
    }

    /// Evaluate `f` on every point and attach the results.
    pub fn evaluated<F: FnMut(&[f64]) -> f64>(self, mut f: F) -> Self {
        let fitness = self.points.iter().map(|p| f(p)).collect();
        OrderedSample {
            fitness: Some(fitness),
            ..self
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    /// Reindex points (and paired fitness values) by `perm`; `perm[k]` is
    /// the input position that moves to output position `k`.
    pub fn permuted(&self, perm: &[usize], ordered: bool) -> OrderedSample {
        OrderedSample {
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
            fitness: self
                .fitness
                .as_ref()
                .map(|f| perm.iter().map(|&i| f[i]).collect()),
            ordered,
        }
    }
}

/// How to perturb the deterministic curve vertices into a stochastic sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StochasticityStrategy {
    /// One point uniformly placed on the segment between each pair of
    /// consecutive selected vertices.
    EdgeUniform,
    /// Per-coordinate Gaussian noise around each vertex, in grid units,
    /// clamped to the grid bounds.
    VertexGaussian { sigma: f64 },
}

impl Default for StochasticityStrategy {
    fn default() -> Self {
        StochasticityStrategy::VertexGaussian { sigma: 0.3 }
    }
}

/// Minimum curve order used by the Hilbert sampler; below this the vertex
/// set is too coarse to sub-sample.
pub const MIN_SAMPLER_ORDER: u32 = 3;

/// Draw `n` points along a Hilbert curve through `space`.
///
/// Picks the smallest order `p >= 3` with `2^(d·p) >= n`, selects `n`
/// distinct curve indices uniformly without replacement, keeps them in
/// ascending curve order, perturbs the vertices per `strategy` (in grid
/// units, where the curve step is 1), and scales the perturbed cloud onto
/// the space so its per-coordinate extremes touch the bounds.
pub fn hilbert_sample<R: Rng>(
    space: &SearchSpace,
    n: usize,
    strategy: StochasticityStrategy,
    rng: &mut R,
) -> Result<OrderedSample> {
    if n < 2 {
        return Err(Error::Domain(
            "hilbert sampler needs at least 2 points".into(),
        ));
    }
    let d = space.dimension();
    let params = sampler_params(d, n)?;
    let indices = sample_distinct_indices(&params, n, rng);
    let vertices: Vec<Vec<f64>> = indices
        .iter()
        .map(|h| {
            let g = hilbert::index_to_point(&params, h).expect("sampled index in range");
            g.into_iter().map(|c| c as f64).collect()
        })
        .collect();

    let grid_points = match strategy {
        StochasticityStrategy::VertexGaussian { sigma } => {
            if !sigma.is_finite() || sigma <= 0.0 {
                return Err(Error::Domain("sigma must be positive".into()));
            }
            let normal = Normal::new(0.0, sigma).expect("validated sigma");
            vertices
                .iter()
                .map(|v| v.iter().map(|&c| c + normal.sample(rng)).collect())
                .collect()
        }
        StochasticityStrategy::EdgeUniform => {
            // First vertex, then one point per consecutive vertex pair.
            let mut pts = Vec::with_capacity(n);
            pts.push(vertices[0].clone());
            for pair in vertices.windows(2) {
                let r: f64 = rng.random();
                pts.push(
                    pair[0]
                        .iter()
                        .zip(&pair[1])
                        .map(|(a, b)| r * a + (1.0 - r) * b)
                        .collect(),
                );
            }
            pts
        }
    };
    Ok(OrderedSample::new(
        normalize_to_space(grid_points, space),
        true,
    ))
}

fn sampler_params(d: usize, n: usize) -> Result<CurveParams> {
    for p in MIN_SAMPLER_ORDER..=hilbert::MAX_ORDER {
        let bits = d as u128 * p as u128;
        if bits >= 128 || (1u128 << bits) >= n as u128 {
            return CurveParams::new(d, p);
        }
    }
    Err(Error::Capacity(format!(
        "sample size {n} exceeds the vertex capacity at maximum curve order"
    )))
}

/// Per-coordinate min-max map of a point cloud onto the space: the
/// extremes of the perturbed cloud land exactly on the bounds, so noise
/// never escapes the box and the boundary region stays covered. A
/// degenerate coordinate (zero spread) maps to the box centre.
fn normalize_to_space(mut cloud: Vec<Vec<f64>>, space: &SearchSpace) -> Vec<Vec<f64>> {
    for j in 0..space.dimension() {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in &cloud {
            lo = lo.min(p[j]);
            hi = hi.max(p[j]);
        }
        let (l, u) = (space.lower()[j], space.upper()[j]);
        if hi > lo {
            let scale = (u - l) / (hi - lo);
            for p in &mut cloud {
                p[j] = (l + (p[j] - lo) * scale).clamp(l, u);
            }
        } else {
            for p in &mut cloud {
                p[j] = 0.5 * (l + u);
            }
        }
    }
    cloud
}

/// `n` distinct indices from `[0, 2^(d·p))`, ascending.
fn sample_distinct_indices<R: Rng>(
    params: &CurveParams,
    n: usize,
    rng: &mut R,
) -> Vec<BigUint> {
    let total_bits = params.total_bits();
    // Dense selections use a partial shuffle; sparse ones rejection-sample.
    if total_bits < 63 {
        let cap = 1u64 << total_bits;
        if cap <= (n as u64).saturating_mul(4).max(1024) {
            let mut all: Vec<u64> = (0..cap).collect();
            for i in 0..n {
                let j = rng.random_range(i as u64..cap) as usize;
                all.swap(i, j);
            }
            let mut picked: Vec<u64> = all[..n].to_vec();
            picked.sort_unstable();
            return picked.into_iter().map(BigUint::from).collect();
        }
    }
    let n_bytes = total_bits.div_ceil(8);
    let spare_bits = (8 - total_bits % 8) % 8;
    let mut buf = vec![0u8; n_bytes];
    let mut seen: HashSet<BigUint> = HashSet::with_capacity(n);
    while seen.len() < n {
        rng.fill(&mut buf[..]);
        if spare_bits > 0 {
            buf[n_bytes - 1] &= 0xFF >> spare_bits;
        }
        seen.insert(BigUint::from_bytes_le(&buf));
    }
    let mut picked: Vec<BigUint> = seen.into_iter().collect();
    picked.sort_unstable();
    picked
}

/// Latin hypercube sample: per dimension, each of the `n` equal-width
/// strata receives exactly one point, uniformly placed within its stratum.
pub fn lhs_sample<R: Rng>(space: &SearchSpace, n: usize, rng: &mut R) -> Result<OrderedSample> {
    if n < 1 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    let d = space.dimension();
    let mut strata: Vec<Vec<usize>> = Vec::with_capacity(d);
    for _ in 0..d {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        strata.push(perm);
    }
    let points = (0..n)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let w = space.width(j) / n as f64;
                    space.lower()[j] + (strata[j][i] as f64 + rng.random::<f64>()) * w
                })
                .collect()
        })
        .collect();
    Ok(OrderedSample::new(points, false))
}

/// Simple random walk: uniform start, then independent per-coordinate
/// steps uniform in `[-max_step, max_step]`, reflected at the bounds.
pub fn random_walk_sample<R: Rng>(
    space: &SearchSpace,
    n: usize,
    max_step: f64,
    rng: &mut R,
) -> Result<OrderedSample> {
    if n < 1 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    if !max_step.is_finite() || max_step <= 0.0 {
        return Err(Error::Domain("max_step must be positive".into()));
    }
    let d = space.dimension();
    let mut current: Vec<f64> = (0..d)
        .map(|j| rng.random_range(space.lower()[j]..space.upper()[j]))
        .collect();
    let mut points = Vec::with_capacity(n);
    points.push(current.clone());
    for _ in 1..n {
        for (j, c) in current.iter_mut().enumerate() {
            let step = rng.random_range(-max_step..max_step);
            *c = reflect(*c + step, space.lower()[j], space.upper()[j]);
        }
        points.push(current.clone());
    }
    Ok(OrderedSample::new(points, true))
}

/// Fold a coordinate back into `[lo, hi]` by reflection at the walls.
fn reflect(x: f64, lo: f64, hi: f64) -> f64 {
    let w = hi - lo;
    let mut t = (x - lo).rem_euclid(2.0 * w);
    if t > w {
        t = 2.0 * w - t;
    }
    lo + t
}

/// `n` i.i.d. uniform points in the box.
pub fn uniform_sample<R: Rng>(space: &SearchSpace, n: usize, rng: &mut R) -> Result<OrderedSample> {
    if n < 1 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    let d = space.dimension();
    let points = (0..n)
        .map(|_| {
            (0..d)
                .map(|j| rng.random_range(space.lower()[j]..space.upper()[j]))
                .collect()
        })
        .collect();
    Ok(OrderedSample::new(points, false))
}
