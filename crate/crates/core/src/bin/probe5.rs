// Scratch probe: feature-pipeline criteria calibration (m0 convergence,
// saliency ranks, classification inequality).
use hilbert_ela::benchmarks::suite;
use hilbert_ela::classify::*;
use hilbert_ela::features::{compute_ic_features, symbol_sequence, partial_information, IcConfig};
use hilbert_ela::ordering::*;
use hilbert_ela::rng::{derive_seed, rng_from_seed};
use hilbert_ela::sampling::*;
use rayon::prelude::*;

fn meta(function_id: u32, instance: u32, dimension: usize) -> RecordMeta {
    RecordMeta {
        function_id,
        instance,
        dimension,
        sampler: String::new(),
        ordering: String::new(),
        seed: 0,
    }
}

fn m0_of(points: &[Vec<f64>], fитness: &[f64]) -> f64 {
    let s = OrderedSample::new(points.to_vec(), true)
        .with_fitness(fитness.to_vec())
        .unwrap();
    let seq = symbol_sequence(&s, 0.0).unwrap();
    partial_information(&seq.symbols).unwrap()
}

fn criterion8() {
    let d = 5;
    let n = 1000 * d;
    let seeds = 30u64;
    let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
    let functions = suite(d, &[1]).unwrap();
    // per ordering, per function: sum of m0 over seeds
    let results: Vec<[Vec<f64>; 3]> = (0..seeds)
        .into_par_iter()
        .map(|seed| {
            let master = derive_seed(808, seed);
            let x = lhs_sample(&space, n, &mut rng_from_seed(master)).unwrap();
            let perms = [
                random_order_indices(n, &mut rng_from_seed(derive_seed(master, 13))),
                nearest_neighbour_indices(&x.points, 0).unwrap(),
                hilbert_order_indices(&x.points, &space).unwrap(),
            ];
            let mut out: [Vec<f64>; 3] = [vec![], vec![], vec![]];
            for f in &functions {
                let y: Vec<f64> = x.points.iter().map(|p| f.evaluate(p).unwrap()).collect();
                for (k, perm) in perms.iter().enumerate() {
                    let pts: Vec<Vec<f64>> = perm.iter().map(|&i| x.points[i].clone()).collect();
                    let ys: Vec<f64> = perm.iter().map(|&i| y[i]).collect();
                    out[k].push(m0_of(&pts, &ys));
                }
            }
            out
        })
        .collect();
    for (k, name) in ["RND", "NN", "HC"].iter().enumerate() {
        let mut means = vec![0.0; functions.len()];
        for r in &results {
            for (m, v) in means.iter_mut().zip(&r[k]) {
                *m += v / seeds as f64;
            }
        }
        let grand = means.iter().sum::<f64>() / means.len() as f64;
        let std = (means.iter().map(|m| (m - grand).powi(2)).sum::<f64>() / (means.len() as f64 - 1.0)).sqrt();
        println!("C8 {name}: per-function mean m0 std = {std:.5}  means={means:.3?}");
    }
}

fn build_rows(d: usize, seeds: &[u64], samplers: &[&str], orderings: &[&str]) -> Vec<FeatureRecord> {
    build_rows2(d, seeds, &[1, 2, 3, 4, 5], samplers, orderings)
}

fn build_rows2(d: usize, seeds: &[u64], instances: &[u32], samplers: &[&str], orderings: &[&str]) -> Vec<FeatureRecord> {
    let mut rows = build_rows3(d, 100 * d, seeds, instances, samplers, orderings);
    rows.extend(build_rows3(d, 1000 * d, seeds, instances, samplers, orderings));
    rows
}

fn build_rows3(d: usize, n: usize, seeds: &[u64], instances: &[u32], samplers: &[&str], orderings: &[&str]) -> Vec<FeatureRecord> {
    let space = SearchSpace::cube(d, -5.0, 5.0).unwrap();
    let functions = suite(d, instances).unwrap();
    let config = IcConfig::default();
    let cells: Vec<(u64, &str)> = seeds
        .iter()
        .flat_map(|&s| samplers.iter().map(move |&smp| (s, smp)))
        .collect();
    cells
        .par_iter()
        .flat_map(|&(seed, sampler)| {
            let master = derive_seed(909, derive_seed(seed, (d * 1_000_000 + n) as u64));
            let x = match sampler {
                "lhs" => lhs_sample(&space, n, &mut rng_from_seed(master)).unwrap(),
                "hilbert" => hilbert_sample(&space, n, StochasticityStrategy::default(), &mut rng_from_seed(master)).unwrap(),
                "rw" => random_walk_sample(&space, n, 1.0, &mut rng_from_seed(master)).unwrap(),
                _ => unreachable!(),
            };
            let mut rows = Vec::new();
            for &ord in orderings {
                let perm: Vec<usize> = match ord {
                    "hc" => hilbert_order_indices(&x.points, &space).unwrap(),
                    "rnd" => random_order_indices(n, &mut rng_from_seed(derive_seed(master, 13))),
                    "none" => (0..n).collect(),
                    _ => unreachable!(),
                };
                for f in &functions {
                    let y: Vec<f64> = x.points.iter().map(|p| f.evaluate(p).unwrap()).collect();
                    let pts: Vec<Vec<f64>> = perm.iter().map(|&i| x.points[i].clone()).collect();
                    let ys: Vec<f64> = perm.iter().map(|&i| y[i]).collect();
                    let s = OrderedSample::new(pts, true).with_fitness(ys).unwrap();
                    let feats = compute_ic_features(&s, &config).unwrap();
                    let mut record = FeatureRecord {
                        features: vec![feats.eps_s, feats.eps_max, feats.eps_ratio, feats.h_max, feats.m0],
                        label: f.group(),
                        meta: meta(f.id(), f.instance(), d),
                    };
                    record.meta.sampler = sampler.to_string();
                    record.meta.ordering = ord.to_string();
                    record.meta.seed = seed;
                    rows.push(record);
                }
            }
            rows
        })
        .collect()
}

fn criterion9() {
    let args: Vec<String> = std::env::args().collect();
    let n_seeds: u64 = args.get(2).map_or(3, |v| v.parse().unwrap());
    let n_inst: u32 = args.get(3).map_or(5, |v| v.parse().unwrap());
    let k: usize = args.get(4).map_or(5, |v| v.parse().unwrap());
    let names: Vec<String> = ["eps_s", "eps_max", "eps_ratio", "h_max", "m0"]
        .iter().map(|s| s.to_string()).collect();
    let seeds: Vec<u64> = (0..n_seeds).collect();
    let insts: Vec<u32> = (1..=n_inst).collect();
    let mut rows = build_rows2(2, &seeds, &insts, &["lhs"], &["hc", "rnd"]);
    rows.extend(build_rows2(5, &seeds, &insts, &["lhs"], &["hc", "rnd"]));
    for ord in ["hc", "rnd"] {
        let records: Vec<FeatureRecord> = rows.iter().filter(|r| r.meta.ordering == ord).cloned().collect();
        let data = Dataset::new(names.clone(), records).unwrap();
        let (train, test) = holdout_split(&data, &[n_inst - 1, n_inst]).unwrap();
        let base = evaluate_accuracy(&train, &test, k).unwrap();
        let imp = permutation_importance(&train, &test, k, 10, &mut rng_from_seed(4242)).unwrap();
        println!("C9 LHS({ord}) seeds={n_seeds} inst={n_inst} k={k}: base={base:.3}");
        for i in &imp {
            println!("    {:<10} mean_drop={:+.4} std={:.4}", i.feature, i.mean_drop, i.std_drop);
        }
    }
}

fn criterion10() {
    let args: Vec<String> = std::env::args().collect();
    let mult: usize = args.get(2).map_or(0, |v| v.parse().unwrap());
    let names: Vec<String> = ["eps_s", "eps_max", "eps_ratio", "h_max", "m0"]
        .iter().map(|s| s.to_string()).collect();
    let seeds: Vec<u64> = (0..10).collect();
    let rows = if mult == 0 {
        build_rows(5, &seeds, &["hilbert", "rw"], &["none"])
    } else {
        build_rows3(5, mult * 5, &seeds, &[1, 2, 3, 4, 5], &["hilbert", "rw"], &["none"])
    };
    for sampler in ["hilbert", "rw"] {
        let mut accs = Vec::new();
        for &seed in &seeds {
            let records: Vec<FeatureRecord> = rows
                .iter()
                .filter(|r| r.meta.sampler == sampler && r.meta.seed == seed)
                .cloned()
                .collect();
            let data = Dataset::new(names.clone(), records).unwrap();
            let (train, test) = holdout_split(&data, &[4, 5]).unwrap();
            accs.push(evaluate_accuracy(&train, &test, 5).unwrap());
        }
        let mean = accs.iter().sum::<f64>() / accs.len() as f64;
        println!("C10 {sampler}: mean accuracy {mean:.4}  per-seed {accs:.2?}");
    }
}

fn main() {
    let which: u32 = std::env::args().nth(1).unwrap().parse().unwrap();
    match which {
        8 => criterion8(),
        9 => criterion9(),
        10 => criterion10(),
        _ => panic!(),
    }
}
