use thiserror::Error;

/// Errors raised by the library. Every operation that can fail returns
/// `Result<T, Error>`; report-style problems (e.g. a failed sphere
/// condition) are data, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("instance too large for exhaustive search: {size} vertices (limit {limit})")]
    InstanceTooLarge { size: usize, limit: usize },

    #[error("dimension {0} is not supported here")]
    DimensionUnsupported(usize),

    #[error("affine span has dimension {span}, need {needed}")]
    DegenerateSpan { span: usize, needed: usize },

    #[error("frameworks do not share the same graph and dimension")]
    GraphMismatch,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("supplied realization is not a valid sphere realization ({0} violations)")]
    WitnessInvalid(usize),

    #[error("supporting points are affinely dependent (Cayley-Menger magnitude {0:e})")]
    NumericallyIllConditioned(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
