use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two degree vectors of different lengths met in one operation.
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An argument broke a documented domain restriction (order bounds,
    /// box bounds, size caps).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input text could not be parsed or failed structural validation.
    #[error("parse error: {0}")]
    Parse(String),

    /// An operation was called on data that violates its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A claimed decomposition does not reproduce the table it was checked
    /// against.
    #[error("inconsistent decomposition: interval sum does not match the table")]
    Inconsistent,
}

pub type Result<T> = std::result::Result<T, Error>;
