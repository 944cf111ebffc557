// Scratch probe: directed components + idealized stratified samples.
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::*;
use rand::Rng;

fn dir_mean(from: &[Vec<f64>], to: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for p in from {
        let mut best = f64::INFINITY;
        for q in to {
            let d2: f64 = p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum();
            if d2 < best { best = d2; }
        }
        total += best.sqrt();
    }
    total / from.len() as f64
}

// One uniform point per orthant-style stratum (2 cells/axis as capacity allows).
fn jittered_grid(d: usize, n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = rng_from_seed(seed);
    let cells_per_axis = (n as f64).powf(1.0 / d as f64).floor().max(1.0) as usize;
    let total_cells = cells_per_axis.pow(d as u32);
    let w = 10.0 / cells_per_axis as f64;
    (0..n).map(|i| {
        let mut cell = i % total_cells;
        (0..d).map(|_| {
            let c = cell % cells_per_axis;
            cell /= cells_per_axis;
            -5.0 + (c as f64 + rng.random::<f64>()) * w
        }).collect()
    }).collect()
}

fn main() {
    let runs = 15;
    for (d, n) in [(5usize, 500usize), (10, 1000)] {
        let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
        let mut s_lhs = [0.0f64; 2];
        let mut s_grid = [0.0f64; 2];
        for run in 0..runs {
            let seed = derive_seed(2026, run as u64);
            let reference = uniform_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 99))).unwrap();
            let lhs = lhs_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 3))).unwrap();
            let grid = jittered_grid(d, n, derive_seed(seed, 4));
            s_lhs[0] += dir_mean(&lhs.points, &reference.points);
            s_lhs[1] += dir_mean(&reference.points, &lhs.points);
            s_grid[0] += dir_mean(&grid, &reference.points);
            s_grid[1] += dir_mean(&reference.points, &grid);
        }
        let r = runs as f64;
        println!("d={d} n={n}: LHS  sample->ref {:.4}  ref->sample {:.4}", s_lhs[0]/r, s_lhs[1]/r);
        println!("d={d} n={n}: GRID sample->ref {:.4}  ref->sample {:.4}", s_grid[0]/r, s_grid[1]/r);
    }
}
