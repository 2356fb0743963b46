use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An element does not belong to the carrier it was used with.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two objects live over different carriers or ambient spaces.
    #[error("carrier mismatch: {0}")]
    Mismatch(String),

    /// The requested closed form is not implemented for this instance.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A stated precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A combinatorial bound was exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Construction-time validation failed (tables, chains, laws).
    #[error("invalid construction: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}
