//! Benchmark harness: repeated seeded runs, performance indicators and the
//! Wilcoxon-based domination ranking.

pub mod config;
pub mod error;
pub mod experiment;
pub mod indicator;
pub mod ranking;
pub mod record;
pub mod stats;

pub use config::{AlgorithmConfig, ExperimentConfig};
pub use error::{BenchError, Result};
pub use experiment::{run_cell, run_experiment, write_results};
pub use indicator::{Indicator, IndicatorKind};
pub use ranking::RankTable;
pub use record::RunRecord;
pub use stats::{domination_ranks, wilcoxon_ranksum_less, RankRow, TestResult};
