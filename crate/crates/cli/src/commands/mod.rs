pub mod classify;
pub mod coverage;
pub mod features;
pub mod order;
pub mod sample;
pub mod suite;
pub mod timing;

use anyhow::Result;
use hilbert_ela::ordering;
use hilbert_ela::rng::rng_from_seed;
use hilbert_ela::sampling::{
    self, OrderedSample, SearchSpace, StochasticityStrategy,
};

use crate::config::{OrderingKind, SamplerKind};

/// Generate one sample with a sampler's default stochasticity settings.
pub(crate) fn generate_sample(
    kind: SamplerKind,
    space: &SearchSpace,
    n: usize,
    seed: u64,
) -> Result<OrderedSample> {
    let mut rng = rng_from_seed(seed);
    let sample = match kind {
        SamplerKind::Hilbert => {
            sampling::hilbert_sample(space, n, StochasticityStrategy::default(), &mut rng)?
        }
        SamplerKind::Lhs => sampling::lhs_sample(space, n, &mut rng)?,
        SamplerKind::RandomWalk => sampling::random_walk_sample(space, n, 1.0, &mut rng)?,
        SamplerKind::Uniform => sampling::uniform_sample(space, n, &mut rng)?,
    };
    Ok(sample)
}

/// The permutation an ordering strategy induces on `points`.
pub(crate) fn ordering_permutation(
    kind: OrderingKind,
    points: &[Vec<f64>],
    space: &SearchSpace,
    seed: u64,
) -> Result<Vec<usize>> {
    let perm = match kind {
        OrderingKind::Hilbert => ordering::hilbert_order_indices(points, space)?,
        OrderingKind::Nn => ordering::nearest_neighbour_indices(points, 0)?,
        OrderingKind::Random => {
            ordering::random_order_indices(points.len(), &mut rng_from_seed(seed))
        }
        OrderingKind::None => (0..points.len()).collect(),
    };
    Ok(perm)
}
