//! Surrogate assistance for population-based ask/tell optimizers.
//!
//! A baseline algorithm (GA, DE, PSO, NSGA-II or anything implementing
//! [`Algorithm`]) is wrapped by [`gpsaf::run_gpsaf`]: each iteration its
//! infill is pre-filtered by surrogate tournaments, biased by a short
//! look-ahead run on the surrogates, and only then truly evaluated.

pub mod algorithm;
pub mod baselines;
pub mod doe;
pub mod error;
pub mod gpsaf;
pub mod problem;
pub mod problems;
pub mod rng;
pub mod solution;
pub mod surrogates;

pub use algorithm::{run_baseline, Algorithm};
pub use error::{Error, Result};
pub use problem::{Evaluation, Problem};
pub use solution::{compare, violation, Archive, Budget, Solution, Values, Verdict};
