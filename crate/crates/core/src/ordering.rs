//! Impose a spatially correlated order on an unordered sample.
//!
//! Three strategies: sorting by Hilbert index of the quantised points,
//! a greedy nearest-neighbour chain, and a random shuffle baseline. Each
//! strategy is also available as a bare permutation so that one ordering
//! of a shared point set can be reused across several fitness vectors.

use crate::error::{Error, Result};
use crate::hilbert::{self, CurveParams};
use crate::sampling::{OrderedSample, SearchSpace};
use rand::seq::SliceRandom;
use rand::Rng;

/// Selectable ordering strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingStrategy {
    HilbertOrder,
    NearestNeighbour,
    RandomOrder,
}

/// Permutation that sorts `points` by Hilbert index.
///
/// The curve order is `p = ⌈log₂(n+1)⌉`, mirroring the n-interval axis
/// stratification of a Latin hypercube sample. Points are floor-binned
/// into `2^p` cells per axis (upper boundary clamps into the last cell);
/// ties keep their original relative order.
pub fn hilbert_order_indices(points: &[Vec<f64>], space: &SearchSpace) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::Domain("cannot order an empty sample".into()));
    }
    let d = space.dimension();
    let p = hilbert::min_order_for_sample(points.len() as u64)?;
    let params = CurveParams::new(d, p)?;
    let cells = (1u128 << p) as f64;
    let max_cell = params.max_coord();
    let mut keyed: Vec<(num_bigint::BigUint, usize)> = Vec::with_capacity(points.len());
    for (i, x) in points.iter().enumerate() {
        if !space.contains(x) {
            return Err(Error::Domain(format!(
                "point {i} lies outside the search space"
            )));
        }
        let grid: Vec<u64> = x
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let rel = (v - space.lower()[j]) / (space.upper()[j] - space.lower()[j]);
                ((rel * cells).floor() as u64).min(max_cell)
            })
            .collect();
        keyed.push((hilbert::point_to_index(&params, &grid)?, i));
    }
    keyed.sort(); // (index, original position): stable tie-break by construction
    Ok(keyed.into_iter().map(|(_, i)| i).collect())
}

/// Sort a sample into Hilbert-curve traversal order.
pub fn order_hilbert(sample: &OrderedSample, space: &SearchSpace) -> Result<OrderedSample> {
    let perm = hilbert_order_indices(&sample.points, space)?;
    Ok(sample.permuted(&perm, true))
}

/// Permutation of the greedy nearest-neighbour chain starting at `start`.
///
/// Repeatedly appends the unvisited point closest (Euclidean) to the
/// current one; distance ties go to the lowest original position.
pub fn nearest_neighbour_indices(points: &[Vec<f64>], start: usize) -> Result<Vec<usize>> {
    let n = points.len();
    if n == 0 {
        return Err(Error::Domain("cannot order an empty sample".into()));
    }
    if start >= n {
        return Err(Error::Domain(format!(
            "start index {start} out of range for {n} points"
        )));
    }
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let mut current = start;
    visited[current] = true;
    order.push(current);
    for _ in 1..n {
        let here = &points[current];
        let mut best = usize::MAX;
        let mut best_d2 = f64::INFINITY;
        for (cand, pt) in points.iter().enumerate() {
            if visited[cand] {
                continue;
            }
            let d2 = dist_sq(here, pt);
            if d2 < best_d2 {
                best_d2 = d2;
                best = cand;
            }
        }
        visited[best] = true;
        order.push(best);
        current = best;
    }
    Ok(order)
}

/// Order a sample as a greedy nearest-neighbour chain from its first point.
pub fn order_nearest_neighbour(sample: &OrderedSample) -> Result<OrderedSample> {
    let perm = nearest_neighbour_indices(&sample.points, 0)?;
    Ok(sample.permuted(&perm, true))
}

/// Uniform random permutation of `0..n` (Fisher–Yates).
pub fn random_order_indices<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Shuffle a sample uniformly at random. The result carries `ordered =
/// true` in the sense of "ready for order-sensitive features", though the
/// order is spatially uncorrelated by construction.
pub fn order_random<R: Rng>(sample: &OrderedSample, rng: &mut R) -> Result<OrderedSample> {
    if sample.is_empty() {
        return Err(Error::Domain("cannot order an empty sample".into()));
    }
    let perm = random_order_indices(sample.len(), rng);
    Ok(sample.permuted(&perm, true))
}

/// Euclidean distances between consecutive points; length `n - 1`.
pub fn step_sizes(sample: &OrderedSample) -> Result<Vec<f64>> {
    if sample.len() < 2 {
        return Err(Error::Domain(
            "step sizes need at least two points".into(),
        ));
    }
    Ok(sample
        .points
        .windows(2)
        .map(|w| dist_sq(&w[0], &w[1]).sqrt())
        .collect())
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use crate::sampling::{lhs_sample, SearchSpace};
    use std::collections::HashMap;

    fn unit_square() -> SearchSpace {
        SearchSpace::cube(2, 0.0, 1.0).unwrap()
    }

    fn sample_of(points: Vec<Vec<f64>>) -> OrderedSample {
        OrderedSample::new(points, false)
    }

    #[test]
    fn hilbert_order_single_point_unchanged() {
        let s = sample_of(vec![vec![0.3, 0.4]]);
        let o = order_hilbert(&s, &unit_square()).unwrap();
        assert_eq!(o.points, s.points);
        assert!(o.ordered);
    }

    #[test]
    fn hilbert_order_visits_cell_centres_in_curve_order() {
        // The 4 centres of a 2x2 grid, shuffled; the ordered output must
        // traverse them so consecutive pairs are axis-adjacent (one
        // coordinate differs by 0.5, the other matches).
        let s = sample_of(vec![
            vec![0.75, 0.25],
            vec![0.25, 0.75],
            vec![0.25, 0.25],
            vec![0.75, 0.75],
        ]);
        let o = order_hilbert(&s, &unit_square()).unwrap();
        for w in o.points.windows(2) {
            let dx = (w[0][0] - w[1][0]).abs();
            let dy = (w[0][1] - w[1][1]).abs();
            assert!(
                (dx < 1e-12 && (dy - 0.5).abs() < 1e-12)
                    || (dy < 1e-12 && (dx - 0.5).abs() < 1e-12),
                "consecutive pair not axis-adjacent: {w:?}"
            );
        }
    }

    #[test]
    fn hilbert_order_is_stable_for_duplicates() {
        let s = sample_of(vec![vec![0.5, 0.5]; 5])
            .with_fitness(vec![0.0, 1.0, 2.0, 3.0, 4.0])
            .unwrap();
        let o = order_hilbert(&s, &unit_square()).unwrap();
        assert_eq!(o.fitness.unwrap(), vec![0.0, 1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn hilbert_order_rejects_out_of_space_points() {
        let s = sample_of(vec![vec![1.5, 0.5]]);
        assert!(matches!(
            order_hilbert(&s, &unit_square()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nn_two_points_preserved() {
        let s = sample_of(vec![vec![5.0, 0.0], vec![0.0, 0.0]]);
        let o = order_nearest_neighbour(&s).unwrap();
        assert_eq!(o.points, s.points);
    }

    #[test]
    fn nn_collinear_chain_is_monotone_for_every_permutation() {
        // Brute force over all orderings of {1,2,3} after a leading 0:
        // the greedy chain must always come out sorted.
        let perms = [
            [1.0, 2.0, 3.0],
            [1.0, 3.0, 2.0],
            [2.0, 1.0, 3.0],
            [2.0, 3.0, 1.0],
            [3.0, 1.0, 2.0],
            [3.0, 2.0, 1.0],
        ];
        for rest in perms {
            let mut pts = vec![vec![0.0]];
            pts.extend(rest.iter().map(|&v| vec![v]));
            let o = order_nearest_neighbour(&sample_of(pts)).unwrap();
            let xs: Vec<f64> = o.points.iter().map(|p| p[0]).collect();
            assert_eq!(xs, vec![0.0, 1.0, 2.0, 3.0]);
        }
    }

    #[test]
    fn nn_ties_break_to_lowest_original_position() {
        // Points 1 and 2 are equidistant from point 0.
        let s = sample_of(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![-1.0, 0.0]]);
        let perm = nearest_neighbour_indices(&s.points, 0).unwrap();
        assert_eq!(perm, vec![0, 1, 2]);
    }

    #[test]
    fn random_order_preserves_multiset_and_fitness_pairing() {
        let space = unit_square();
        let mut rng = rng_from_seed(10);
        let s = lhs_sample(&space, 50, &mut rng).unwrap();
        let s = s.clone().with_fitness((0..50).map(|i| i as f64).collect()).unwrap();
        let o = order_random(&s, &mut rng).unwrap();
        assert_eq!(o.len(), 50);
        let fit = o.fitness.as_ref().unwrap();
        for (p, f) in o.points.iter().zip(fit) {
            // Fitness value i was attached to point i of the input.
            assert_eq!(p, &s.points[*f as usize]);
        }
    }

    #[test]
    fn random_order_single_point_unchanged() {
        let s = sample_of(vec![vec![0.1, 0.2]]);
        let o = order_random(&s, &mut rng_from_seed(1)).unwrap();
        assert_eq!(o.points, s.points);
    }

    #[test]
    fn random_order_permutations_are_uniform() {
        // Over 10000 shuffles of 3 items each of the 6 permutations
        // should occur with frequency 1/6 ± 0.02.
        let s = sample_of(vec![vec![0.0], vec![1.0], vec![2.0]]);
        let mut rng = rng_from_seed(99);
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for _ in 0..10_000 {
            let o = order_random(&s, &mut rng).unwrap();
            let key: Vec<usize> = o.points.iter().map(|p| p[0] as usize).collect();
            *counts.entry(key).or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        for (perm, c) in counts {
            let freq = c as f64 / 10_000.0;
            assert!(
                (freq - 1.0 / 6.0).abs() < 0.02,
                "permutation {perm:?} frequency {freq}"
            );
        }
    }

    #[test]
    fn step_sizes_examples() {
        let dup = sample_of(vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(step_sizes(&dup).unwrap(), vec![0.0]);

        let line = sample_of(vec![vec![0.0], vec![3.0], vec![7.0]]);
        assert_eq!(step_sizes(&line).unwrap(), vec![3.0, 4.0]);

        let single = sample_of(vec![vec![0.0]]);
        assert!(matches!(step_sizes(&single), Err(Error::Domain(_))));
    }

    #[test]
    fn nn_chain_shorter_than_random_on_average() {
        let space = unit_square();
        let mut nn_total = 0.0;
        let mut rnd_total = 0.0;
        for seed in 0..30 {
            let mut rng = rng_from_seed(seed);
            let s = lhs_sample(&space, 300, &mut rng).unwrap();
            let nn = order_nearest_neighbour(&s).unwrap();
            let rnd = order_random(&s, &mut rng).unwrap();
            nn_total += step_sizes(&nn).unwrap().iter().sum::<f64>();
            rnd_total += step_sizes(&rnd).unwrap().iter().sum::<f64>();
        }
        assert!(
            nn_total < rnd_total,
            "nn {nn_total} not shorter than random {rnd_total}"
        );
    }

    #[test]
    fn orderings_reject_empty_samples() {
        let empty = sample_of(vec![]);
        assert!(order_hilbert(&empty, &unit_square()).is_err());
        assert!(order_nearest_neighbour(&empty).is_err());
        assert!(order_random(&empty, &mut rng_from_seed(0)).is_err());
    }
}
