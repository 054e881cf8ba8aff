use thiserror::Error;

/// Errors produced by the sequence library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} must be ≥ 1 (got {value})")]
    InvalidParam { name: &'static str, value: i64 },

    #[error("index n must be ≥ {min} (got {value})")]
    IndexOutOfRange { min: i64, value: i64 },

    #[error("empty range: lower bound {lo} exceeds upper bound {hi}")]
    EmptyRange { lo: i64, hi: i64 },

    /// A theorem hypothesis (k > i, i = 1, ...) does not hold for the inputs.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("matrix dimension mismatch: {left}×{left} vs {right}×{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("negative value in Lucas initial branch at n = {n}")]
    NegativeLucasInitial { n: i64 },

    #[error("unknown sequence name `{0}`")]
    UnknownSequence(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("reference data has no entry for index {0}")]
    MissingCoverage(i64),

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn hypothesis<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Hypothesis(msg.into()))
}
