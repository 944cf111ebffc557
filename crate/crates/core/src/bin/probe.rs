// Scratch probe for experiment calibration; removed before release.
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::*;

fn avg_hd(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let dir = |from: &[Vec<f64>], to: &[Vec<f64>]| -> f64 {
        let mut total = 0.0;
        for p in from {
            let mut best = f64::INFINITY;
            for q in to {
                let d2: f64 = p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum();
                if d2 < best {
                    best = d2;
                }
            }
            total += best.sqrt();
        }
        total / from.len() as f64
    };
    dir(a, b).max(dir(b, a))
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d: usize = args[1].parse().unwrap();
    let n: usize = args[2].parse().unwrap();
    let runs: usize = args[3].parse().unwrap();
    let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
    let mut sums = [0.0f64; 3];
    let mut hc_wins = 0;
    for run in 0..runs {
        let seed = derive_seed(2026, run as u64);
        let reference = uniform_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 99))).unwrap();
        let hc = hilbert_sample(&space, n, StochasticityStrategy::default(), &mut rng_from_seed(derive_seed(seed, 1))).unwrap();
        let lhs = lhs_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 2))).unwrap();
        let rw = random_walk_sample(&space, n, 1.0, &mut rng_from_seed(derive_seed(seed, 3))).unwrap();
        let vals = [
            avg_hd(&hc.points, &reference.points),
            avg_hd(&lhs.points, &reference.points),
            avg_hd(&rw.points, &reference.points),
        ];
        if vals[0] < vals[1] {
            hc_wins += 1;
        }
        for i in 0..3 {
            sums[i] += vals[i];
        }
    }
    println!(
        "d={d} n={n}: HC {:.4}  LHS {:.4}  RW {:.4}  (hc beats lhs in {hc_wins}/{runs} runs)",
        sums[0] / runs as f64,
        sums[1] / runs as f64,
        sums[2] / runs as f64
    );
}
