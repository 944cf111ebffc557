//! Hilbert-curve sampling and ordering for exploratory landscape analysis.
//!
//! Order-sensitive landscape features such as the information content set
//! need samples that are sequences of neighbouring solutions. This crate
//! provides:
//!
//! - [`hilbert`]: bijective index ↔ grid-point mapping on an n-dimensional
//!   Hilbert curve, with arbitrary-precision indices;
//! - [`sampling`]: Hilbert-curve, Latin hypercube, random-walk and uniform
//!   samplers over bounded continuous spaces;
//! - [`ordering`]: Hilbert-index, greedy nearest-neighbour and random
//!   orderings of an existing sample, plus step-size diagnostics;
//! - [`features`]: the five information-content metrics computed from an
//!   ordered sample with fitness values;
//! - [`coverage`]: Hausdorff-distance coverage measurement and Friedman
//!   mean ranks;
//! - [`benchmarks`]: a deterministic ten-function test suite spanning five
//!   problem groups, with seeded instance transformations;
//! - [`classify`]: k-nearest-neighbour group prediction and permutation
//!   feature importance.

pub mod benchmarks;
pub mod classify;
pub mod coverage;
pub mod error;
pub mod features;
pub mod hilbert;
pub mod io;
pub mod ordering;
pub mod rng;
pub mod sampling;

pub use error::{Error, Result};
pub use sampling::{OrderedSample, SearchSpace};
