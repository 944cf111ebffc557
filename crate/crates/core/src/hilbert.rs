//! Bijective mapping between 1-D Hilbert curve indices and points on a
//! d-dimensional integer grid of side `2^p`, plus curve-order arithmetic.
//!
//! The conversion uses the bit-transpose formulation of Skilling
//! ("Programming the Hilbert curve", AIP Conf. Proc. 707, 2004): both
//! directions run in O(d·p) word operations with no recursion. Curve
//! indices are arbitrary-precision because `2^(d·p)` overflows machine
//! words quickly (`d=20, p=6` already needs 120 bits).
//!
//! Orientation is fixed so that index 0 maps to the all-zeros corner.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Maximum supported curve order (bits per axis). Grid coordinates are
/// stored in `u64`, so a single axis cannot exceed `2^64` cells.
pub const MAX_ORDER: u32 = 64;

/// Position on the 1-D curve, in `[0, 2^(d·p))`.
pub type HilbertIndex = BigUint;

/// A vertex of the `d`-dimensional grid; each coordinate lies in `[0, 2^p - 1]`.
pub type GridPoint = Vec<u64>;

/// Dimension count `d` and curve order `p` of a Hilbert curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveParams {
    d: usize,
    p: u32,
}

impl CurveParams {
    pub fn new(d: usize, p: u32) -> Result<Self> {
        if d < 1 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        if p < 1 {
            return Err(Error::Domain("curve order must be at least 1".into()));
        }
        if p > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "curve order {p} exceeds the supported maximum of {MAX_ORDER} bits per axis"
            )));
        }
        Ok(CurveParams { d, p })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    /// Total number of index bits, `d·p`.
    pub fn total_bits(&self) -> usize {
        self.d * self.p as usize
    }

    /// Largest valid coordinate on any axis, `2^p - 1`.
    pub fn max_coord(&self) -> u64 {
        (((1u128) << self.p) - 1) as u64
    }
}

/// Number of curve vertices, `2^(d·p)`, exactly.
pub fn vertex_count(params: &CurveParams) -> BigUint {
    BigUint::from(1u8) << params.total_bits()
}

/// Smallest curve order whose vertex count can index an `n`-point sample:
/// `⌈log₂(n+1)⌉`, computed in integer arithmetic.
pub fn min_order_for_sample(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    // bit_length(n) is the least p with 2^p >= n+1.
    Ok(u64::BITS - n.leading_zeros())
}

/// Grid vertex visited at curve position `h`.
pub fn index_to_point(params: &CurveParams, h: &HilbertIndex) -> Result<GridPoint> {
    if h.bits() > params.total_bits() as u64 {
        return Err(Error::Range(format!(
            "index {h} out of range for d={}, p={}",
            params.d, params.p
        )));
    }
    let mut axes = index_to_transpose(h, params);
    transpose_to_axes(&mut axes, params.p);
    Ok(axes)
}

/// Curve position visiting grid vertex `point`; exact inverse of
/// [`index_to_point`].
pub fn point_to_index(params: &CurveParams, point: &[u64]) -> Result<HilbertIndex> {
    if point.len() != params.d {
        return Err(Error::Range(format!(
            "point has {} coordinates, expected {}",
            point.len(),
            params.d
        )));
    }
    let max = params.max_coord();
    if let Some(c) = point.iter().find(|&&c| c > max) {
        return Err(Error::Range(format!(
            "coordinate {c} exceeds grid bound {max} at order {}",
            params.p
        )));
    }
    let mut axes = point.to_vec();
    axes_to_transpose(&mut axes, params.p);
    Ok(transpose_to_index(&axes, params))
}

// The transposed representation spreads the d·p index bits across d words:
// word i holds every d-th bit of the index, starting from bit i of the
// most significant group. Skilling's passes below convert between that
// form and plain grid coordinates in place.

fn transpose_to_axes(x: &mut [u64], p: u32) {
    let n = x.len();
    // Gray decode by H ^ (H/2).
    let t = x[n - 1] >> 1;
    for i in (1..n).rev() {
        x[i] ^= x[i - 1];
    }
    x[0] ^= t;
    // Undo excess work: q = 2, 4, ..., 2^(p-1).
    for q_bit in 1..p {
        let q: u64 = 1 << q_bit;
        let mask = q - 1;
        for i in (0..n).rev() {
            if x[i] & q != 0 {
                x[0] ^= mask; // invert
            } else {
                let t = (x[0] ^ x[i]) & mask; // exchange
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }
}

fn axes_to_transpose(x: &mut [u64], p: u32) {
    let n = x.len();
    // Inverse undo: q = 2^(p-1), ..., 2.
    for q_bit in (1..p).rev() {
        let q: u64 = 1 << q_bit;
        let mask = q - 1;
        for i in 0..n {
            if x[i] & q != 0 {
                x[0] ^= mask;
            } else {
                let t = (x[0] ^ x[i]) & mask;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }
    // Gray encode.
    for i in 1..n {
        x[i] ^= x[i - 1];
    }
    let mut t = 0u64;
    for q_bit in (1..p).rev() {
        let q: u64 = 1 << q_bit;
        if x[n - 1] & q != 0 {
            t ^= q - 1;
        }
    }
    for xi in x.iter_mut() {
        *xi ^= t;
    }
}

fn index_to_transpose(h: &HilbertIndex, params: &CurveParams) -> Vec<u64> {
    let d = params.d;
    let p = params.p as usize;
    let total = params.total_bits();
    let bytes = h.to_bytes_le();
    let bit_set = |bit: usize| -> bool {
        bytes
            .get(bit / 8)
            .is_some_and(|b| (b >> (bit % 8)) & 1 == 1)
    };
    let mut x = vec![0u64; d];
    for row in 0..p {
        for (axis, word) in x.iter_mut().enumerate() {
            // Row 0 carries the most significant bit of every axis word.
            if bit_set(total - 1 - (row * d + axis)) {
                *word |= 1u64 << (p - 1 - row);
            }
        }
    }
    x
}

fn transpose_to_index(x: &[u64], params: &CurveParams) -> HilbertIndex {
    let d = params.d;
    let p = params.p as usize;
    let total = params.total_bits();
    let mut bytes = vec![0u8; total.div_ceil(8)];
    for row in 0..p {
        for (axis, word) in x.iter().enumerate() {
            if (word >> (p - 1 - row)) & 1 == 1 {
                let bit = total - 1 - (row * d + axis);
                bytes[bit / 8] |= 1 << (bit % 8);
            }
        }
    }
    BigUint::from_bytes_le(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn params(d: usize, p: u32) -> CurveParams {
        CurveParams::new(d, p).unwrap()
    }

    #[test]
    fn curve_starts_at_origin() {
        let cp = params(2, 1);
        assert_eq!(
            index_to_point(&cp, &BigUint::from(0u8)).unwrap(),
            vec![0, 0]
        );
        assert_eq!(
            point_to_index(&cp, &[0, 0]).unwrap(),
            BigUint::from(0u8)
        );
    }

    #[test]
    fn round_trip_d2_p2_all_indices() {
        let cp = params(2, 2);
        for h in 0u32..16 {
            let h = BigUint::from(h);
            let pt = index_to_point(&cp, &h).unwrap();
            assert_eq!(point_to_index(&cp, &pt).unwrap(), h);
        }
    }

    #[test]
    fn round_trip_d2_p3_all_grid_points() {
        let cp = params(2, 3);
        for x in 0u64..8 {
            for y in 0u64..8 {
                let h = point_to_index(&cp, &[x, y]).unwrap();
                assert_eq!(index_to_point(&cp, &h).unwrap(), vec![x, y]);
            }
        }
    }

    #[test]
    fn consecutive_indices_are_grid_neighbours_d3_p2() {
        // Exhaustive over all 64 indices: consecutive points differ in
        // exactly one coordinate and by exactly 1.
        let cp = params(3, 2);
        let mut prev = index_to_point(&cp, &BigUint::from(0u8)).unwrap();
        for h in 1u32..64 {
            let cur = index_to_point(&cp, &BigUint::from(h)).unwrap();
            let l1: u64 = prev
                .iter()
                .zip(&cur)
                .map(|(a, b)| a.abs_diff(*b))
                .sum();
            assert_eq!(l1, 1, "indices {} and {} not adjacent", h - 1, h);
            prev = cur;
        }
    }

    #[test]
    fn bijective_over_full_grid_d5_p2() {
        // All 1024 grid points map onto exactly the index set {0..1023}.
        let cp = params(5, 2);
        let mut seen = HashSet::new();
        let mut point = [0u64; 5];
        loop {
            let h = point_to_index(&cp, &point).unwrap();
            assert!(h < vertex_count(&cp));
            assert!(seen.insert(h), "duplicate index for {point:?}");
            // Odometer over the 4^5 grid.
            let mut axis = 0;
            loop {
                point[axis] += 1;
                if point[axis] < 4 {
                    break;
                }
                point[axis] = 0;
                axis += 1;
                if axis == 5 {
                    assert_eq!(seen.len(), 1024);
                    return;
                }
            }
        }
    }

    #[test]
    fn min_order_examples() {
        assert_eq!(min_order_for_sample(1).unwrap(), 1);
        assert_eq!(min_order_for_sample(7).unwrap(), 3);
        // 2^6 = 64 < 101 <= 128 = 2^7
        assert_eq!(min_order_for_sample(100).unwrap(), 7);
        assert!(matches!(min_order_for_sample(0), Err(Error::Domain(_))));
    }

    #[test]
    fn vertex_count_examples() {
        assert_eq!(vertex_count(&params(2, 1)), BigUint::from(4u8));
        assert_eq!(vertex_count(&params(5, 3)), BigUint::from(32768u32));
        assert_eq!(vertex_count(&params(10, 2)), BigUint::from(1_048_576u32));
    }

    #[test]
    fn index_out_of_range_rejected() {
        let cp = params(2, 2);
        assert!(matches!(
            index_to_point(&cp, &BigUint::from(16u8)),
            Err(Error::Range(_))
        ));
        assert!(index_to_point(&cp, &BigUint::from(15u8)).is_ok());
    }

    #[test]
    fn coordinate_out_of_range_rejected() {
        let cp = params(2, 2);
        assert!(matches!(
            point_to_index(&cp, &[4, 0]),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            point_to_index(&cp, &[0, 0, 0]),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(matches!(CurveParams::new(0, 1), Err(Error::Domain(_))));
        assert!(matches!(CurveParams::new(1, 0), Err(Error::Domain(_))));
        assert!(matches!(CurveParams::new(1, 65), Err(Error::Capacity(_))));
    }

    #[test]
    fn one_dimensional_curve_is_monotone() {
        let cp = params(1, 4);
        for h in 0u64..16 {
            let pt = index_to_point(&cp, &BigUint::from(h)).unwrap();
            assert_eq!(pt, vec![h]);
        }
    }

    #[test]
    fn high_bit_width_round_trip() {
        // d·p = 512: exercise the arbitrary-precision index path.
        let cp = params(8, 64);
        let h = (BigUint::from(1u8) << 511usize) + BigUint::from(987_654_321u64);
        let pt = index_to_point(&cp, &h).unwrap();
        assert_eq!(point_to_index(&cp, &pt).unwrap(), h);
    }
}
