use thiserror::Error;

/// Errors raised across the optimization stack.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("missing values: {0}")]
    MissingValues(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("budget error: {0}")]
    Budget(String),
    #[error("algorithm stalled: infill returned no designs")]
    StalledAlgorithm,
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("no reference front available for `{0}`")]
    UnsupportedFront(String),
    #[error("unsupported objective dimension {0}")]
    UnsupportedDimension(usize),
    #[error("non-finite numeric input")]
    NumericInput,
    #[error("metric undefined: {0}")]
    UndefinedMetric(String),
    #[error("surrogate fit failed: {0}")]
    EnsembleFit(String),
    #[error("invalid state: {0}")]
    State(String),
}

pub type Result<T> = std::result::Result<T, Error>;
