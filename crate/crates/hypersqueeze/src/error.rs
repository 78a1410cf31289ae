//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    #[error("norm {norm:.3e} exceeds accepted range {max:.3e}; rescale the argument")]
    RangeExceeded { norm: f64, max: f64 },

    #[error("{what} violated: residual {residual:.3e} > tolerance {tolerance:.3e}")]
    ConstraintViolation {
        what: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular decomposition: {0}")]
    SingularDecomposition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn constraint(what: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Error::ConstraintViolation {
            what: what.into(),
            residual,
            tolerance,
        }
    }
}
