use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid spectrum family: {0}")]
    InvalidFamily(String),
    #[error("invalid benchmark config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Core(#[from] persym_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, BenchError>;
