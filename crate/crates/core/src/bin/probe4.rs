// Scratch probe: post-hoc rescaling variants of the HC sample.
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

fn hc_vertices(d: usize, p: u32, n: usize, rng: &mut impl Rng) -> Vec<Vec<f64>> {
    let params = CurveParams::new(d, p).unwrap();
    let cap_bits = d * p as usize;
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
    v.iter().map(|h| index_to_point(&params, h).unwrap().iter().map(|&c| c as f64).collect()).collect()
}

fn main() {
    let runs = 20;
    for (d, n, target, lhs_ref) in [
        (5usize, 500usize, 2.0642, 2.0866),
        (5, 1580, 1.6065, 1.6218),
        (10, 1000, 4.9716, 5.0651),
        (10, 3160, 4.3345, 4.4297),
    ] {
        let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
        let mut sum = 0.0;
        for run in 0..runs {
            let seed = derive_seed(2026, run as u64);
            let reference = uniform_sample(&space, n, &mut rng_from_seed(derive_seed(seed, 99))).unwrap();
            let mut rng = rng_from_seed(derive_seed(seed, 1));
            let verts = hc_vertices(d, 3, n, &mut rng);
            let normal = Normal::new(0.0, 0.3f64).unwrap();
            // noise in grid units, then min-max rescale each axis onto the box
            let noisy: Vec<Vec<f64>> = verts.iter().map(|v| {
                v.iter().map(|&c| c + normal.sample(&mut rng)).collect()
            }).collect();
            let mut pts = noisy;
            for j in 0..d {
                let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                for p in &pts { lo = lo.min(p[j]); hi = hi.max(p[j]); }
                for p in &mut pts { p[j] = -5.0 + (p[j] - lo) / (hi - lo) * 10.0; }
            }
            sum += avg_hd(&pts, &reference.points);
        }
        println!("d={d} n={n} minmax-rescale: {:.4}  (target {target}, lhs {lhs_ref})", sum / runs as f64);
    }
}
