//! Statistical behaviour of the Hilbert sampler's stochasticity
//! strategies on a full-vertex 2-D order-8 walk (65536 vertices, 65535
//! steps).

use hilbert_ela::ordering::step_sizes;
use hilbert_ela::rng::rng_from_seed;
use hilbert_ela::sampling::{hilbert_sample, SearchSpace, StochasticityStrategy};

const FULL_WALK: usize = 1 << 16;

fn full_walk_steps(strategy: StochasticityStrategy, seed: u64) -> Vec<f64> {
    let space = SearchSpace::cube(2, -5.0, 5.0).unwrap();
    let mut rng = rng_from_seed(seed);
    let sample = hilbert_sample(&space, FULL_WALK, strategy, &mut rng).unwrap();
    assert_eq!(sample.len(), FULL_WALK);
    step_sizes(&sample).unwrap()
}

fn skewness(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let m2 = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    let m3 = xs.iter().map(|x| (x - mean).powi(3)).sum::<f64>() / n;
    m3 / m2.powf(1.5)
}

#[test]
fn vertex_gaussian_step_mode_sits_near_the_unit_grid_step() {
    let steps = full_walk_steps(StochasticityStrategy::VertexGaussian { sigma: 0.3 }, 7);
    assert_eq!(steps.len(), FULL_WALK - 1);
    // One grid unit after scaling [-5,5] onto 2^8 - 1 cells.
    let unit = 10.0 / 255.0;
    let bin_width = unit / 10.0;
    let mut bins = vec![0usize; 40];
    for &s in &steps {
        let b = (s / bin_width) as usize;
        if b < bins.len() {
            bins[b] += 1;
        }
    }
    let mode_bin = bins
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(i, _)| i)
        .unwrap();
    let mode = (mode_bin as f64 + 0.5) * bin_width;
    assert!(
        (mode - unit).abs() <= 0.2 * unit,
        "mode {mode} vs unit step {unit}"
    );
    // Unimodal in the coarse sense: counts rise to the mode then fall.
    let coarse: Vec<usize> = bins.chunks(5).map(|c| c.iter().sum()).collect();
    let coarse_peak = coarse
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(i, _)| i)
        .unwrap();
    for w in coarse[..=coarse_peak].windows(2) {
        assert!(w[0] <= w[1], "left flank not rising: {coarse:?}");
    }
    for w in coarse[coarse_peak..].windows(2) {
        assert!(w[0] >= w[1], "right flank not falling: {coarse:?}");
    }
}

#[test]
fn vertex_gaussian_steps_are_less_skewed_than_edge_uniform() {
    let mut gaussian_total = 0.0;
    let mut edge_total = 0.0;
    for seed in 0..30 {
        gaussian_total += skewness(&full_walk_steps(
            StochasticityStrategy::VertexGaussian { sigma: 0.3 },
            seed,
        ));
        edge_total += skewness(&full_walk_steps(StochasticityStrategy::EdgeUniform, seed));
    }
    let gaussian_mean = gaussian_total / 30.0;
    let edge_mean = edge_total / 30.0;
    assert!(
        gaussian_mean < edge_mean,
        "gaussian skew {gaussian_mean} not below edge-uniform skew {edge_mean}"
    );
}
