use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("unknown function {name:?}; valid names: {valid}")]
    UnknownObjective { name: String, valid: String },

    #[error("unknown variant {name:?}; valid labels: {valid}")]
    UnknownVariant { name: String, valid: String },

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Usage errors exit with status 2, runtime errors with 1.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::NonFinite { .. }
                | Error::InvalidConfig(_)
                | Error::EmptyInput(_)
                | Error::UnknownObjective { .. }
                | Error::UnknownVariant { .. }
        )
    }
}
