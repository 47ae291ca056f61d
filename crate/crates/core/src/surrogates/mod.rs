//! Per-function surrogate models and the ensemble that selects among them.

mod ensemble;
mod estimate;
mod kriging;
mod metrics;
mod nelder_mead;
mod plog;
mod rbf;

pub use ensemble::{candidate_specs, CandidateSpec, EnsembleOptions, ModelKind, SurrogateEnsemble, CV_FOLDS};
pub use estimate::ErrorEstimate;
pub use kriging::{KrigingModel, KrigingOptions, LOG_THETA_MAX, LOG_THETA_MIN, NUGGET};
pub use metrics::{kendall_tau_distance, max_abs_error, Window};
pub use plog::{plog, plog_inv};
pub use rbf::{Kernel, RbfModel};
