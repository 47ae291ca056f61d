use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("statistics: {0}")]
    Statistics(String),
    #[error(transparent)]
    Core(#[from] gpsaf::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T> = std::result::Result<T, BenchError>;
