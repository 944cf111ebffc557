//! Property tests for the curve mapping: round trips and unit-step
//! adjacency across randomly drawn dimensions and orders up to 512 index
//! bits.

use hilbert_ela::hilbert::{index_to_point, point_to_index, vertex_count, CurveParams};
use num_bigint::BigUint;
use proptest::prelude::*;

/// (d, p) pairs with d·p ≤ 512 and p ≤ 64.
fn params_strategy() -> impl Strategy<Value = (usize, u32)> {
    (1usize..=512).prop_flat_map(|d| {
        let p_max = (512 / d).min(64).max(1) as u32;
        (Just(d), 1..=p_max)
    })
}

fn random_index(d: usize, p: u32, raw: &[u8]) -> BigUint {
    // Interpret the raw bytes as an integer and reduce below 2^(d·p).
    BigUint::from_bytes_le(raw) % (BigUint::from(1u8) << (d * p as usize))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_round_trips((d, p) in params_strategy(), raw in proptest::collection::vec(any::<u8>(), 64)) {
        let params = CurveParams::new(d, p).unwrap();
        let h = random_index(d, p, &raw);
        let point = index_to_point(&params, &h).unwrap();
        prop_assert_eq!(point.len(), d);
        let max = params.max_coord();
        prop_assert!(point.iter().all(|&c| c <= max));
        prop_assert_eq!(point_to_index(&params, &point).unwrap(), h);
    }

    #[test]
    fn point_round_trips((d, p) in params_strategy(), seed in any::<u64>()) {
        let params = CurveParams::new(d, p).unwrap();
        // Cheap deterministic coordinates within the grid.
        let mut state = seed;
        let point: Vec<u64> = (0..d)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> (64 - p)
            })
            .collect();
        let h = point_to_index(&params, &point).unwrap();
        prop_assert!(h < vertex_count(&params));
        prop_assert_eq!(index_to_point(&params, &h).unwrap(), point);
    }

    #[test]
    fn consecutive_indices_are_adjacent((d, p) in params_strategy(), raw in proptest::collection::vec(any::<u8>(), 64)) {
        let params = CurveParams::new(d, p).unwrap();
        let h = random_index(d, p, &raw);
        let h = if &h + 1u8 == vertex_count(&params) { h - 1u8 } else { h };
        let a = index_to_point(&params, &h).unwrap();
        let b = index_to_point(&params, &(&h + 1u8)).unwrap();
        let l1: u64 = a.iter().zip(&b).map(|(x, y)| x.abs_diff(*y)).sum();
        prop_assert_eq!(l1, 1);
    }
}
