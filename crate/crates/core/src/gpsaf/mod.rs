//! The surrogate-assisted wrapper around an ask/tell baseline.

mod config;
mod phases;
mod run;

pub use config::GpsafConfig;
pub use phases::{
    alpha_phase, beta_phase, compare_noisy, nearest, predict_solutions, prob_knockout_tournament,
    replacement_phase, replacement_probabilities,
};
pub use run::{run_gpsaf, run_gpsaf_traced, GpsafRun, IterationTrace};
