// Scratch probe: endpoint-inclusive vs cell-centre grid scaling.
use hilbert_ela::hilbert::*;
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::*;
use num_bigint::BigUint;
use rand::Rng;
use rand_distr::{Distribution, Normal};

fn avg_hd(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let dir = |from: &[Vec<f64>], to: &[Vec<f64>]| -> f64 {
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
    };
    dir(a, b).max(dir(b, a))
}

fn sample_hc(d: usize, p: u32, n: usize, sigma: f64, centre: bool, stratified: bool, seed: u64) -> Vec<Vec<f64>> {
    let params = CurveParams::new(d, p).unwrap();
    let cap_bits = d * p as usize;
    let mut rng = rng_from_seed(seed);
    let indices: Vec<BigUint> = if stratified {
        let cap = BigUint::from(1u8) << cap_bits;
        (0..n).map(|i| {
            let lo = &cap * BigUint::from(i) / BigUint::from(n);
            let hi = &cap * BigUint::from(i + 1) / BigUint::from(n);
            let width = &hi - &lo;
            lo + BigUint::from(rng.random::<u64>()) % width
        }).collect()
    } else {
        let mut set = std::collections::HashSet::new();
        let n_bytes = cap_bits.div_ceil(8);
        let spare = (8 - cap_bits % 8) % 8;
        let mut buf = vec![0u8; n_bytes];
        while set.len() < n {
            rng.fill(&mut buf[..]);
            if spare > 0 { buf[n_bytes-1] &= 0xFF >> spare; }
            set.insert(BigUint::from_bytes_le(&buf));
        }
        let mut v: Vec<BigUint> = set.into_iter().collect();
        v.sort();
        v
    };
    let indices = indices;
    let normal = Normal::new(0.0, sigma).unwrap();
    let cells = (1u64 << p) as f64;
    let max_coord = params.max_coord() as f64;
    let _ = max_coord;
    indices.iter().map(|h| {
        let v = index_to_point(&params, h).unwrap();
        v.iter().map(|&c| {
            let jitter = if centre {
                rng.random::<f64>() - 0.5 // uniform in cell
            } else {
                normal.sample(&mut rng)
            };
            let g = c as f64 + jitter;
            (-5.0 + (g + 0.5) * 10.0 / cells).clamp(-5.0, 5.0)
        }).collect()
    }).collect()
}

fn main() {
    let runs = 30usize;
    for (d, n, target) in [(5usize, 500usize, 2.0642), (5, 1580, 1.6065), (10, 1000, 4.9716), (10, 3160, 4.3345)] {
        let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
        for (sigma, in_cell) in [(0.3, false), (0.45, false), (0.6, false), (0.8, false), (0.0, true)] {
            let mut sum = 0.0;
            for run in 0..runs {
                let seed = derive_seed(2026, run as u64);
                let reference = uniform_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 99))).unwrap();
                let hc = sample_hc(d, 3, n, if in_cell { 0.3 } else { sigma }, in_cell, false, derive_seed(seed, 1));
                sum += avg_hd(&hc, &reference.points);
            }
            println!("d={d} n={n} p=3 centre sigma={sigma:<4} in_cell={in_cell:<5}: {:.4}  (target {target})", sum / runs as f64);
        }
    }
}
