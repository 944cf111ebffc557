// Scratch probe: step-size claims and ordering cost.
use hilbert_ela::ordering::*;
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::*;
use std::time::Instant;

fn main() {
    // C4: max-step comparison and NN decile growth, 30 seeds.
    let space = SearchSpace::cube(2, -5.0, 5.0).unwrap();
    let mut hc_wins = 0;
    let mut decile_wins = 0;
    for seed in 0..30u64 {
        let x = lhs_sample(&space, 1000, &mut rng_from_seed(derive_seed(505, seed))).unwrap();
        let hc = order_hilbert(&x, &space).unwrap();
        let nn = order_nearest_neighbour(&x).unwrap();
        let hc_steps = step_sizes(&hc).unwrap();
        let nn_steps = step_sizes(&nn).unwrap();
        let max = |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max);
        if max(&hc_steps) < max(&nn_steps) {
            hc_wins += 1;
        }
        let dec = nn_steps.len() / 10;
        let first: f64 = nn_steps[..dec].iter().sum::<f64>() / dec as f64;
        let last: f64 = nn_steps[nn_steps.len() - dec..].iter().sum::<f64>() / dec as f64;
        if last > first {
            decile_wins += 1;
        }
    }
    println!("C4: hc max-step wins {hc_wins}/30, nn last>first decile {decile_wins}/30");

    // C5: ordering cost at d=10.
    let space = SearchSpace::cube(10, -5.0, 5.0).unwrap();
    for n in [1000usize, 5000, 10000] {
        let x = lhs_sample(&space, n, &mut rng_from_seed(7)).unwrap();
        let t0 = Instant::now();
        let _ = hilbert_order_indices(&x.points, &space).unwrap();
        let t_hc = t0.elapsed().as_secs_f64();
        let t1 = Instant::now();
        let _ = nearest_neighbour_indices(&x.points, 0).unwrap();
        let t_nn = t1.elapsed().as_secs_f64();
        println!("C5 n={n}: hilbert {t_hc:.4}s nn {t_nn:.4}s ratio {:.1} gap {:.4}", t_nn / t_hc, t_nn - t_hc);
    }
}
