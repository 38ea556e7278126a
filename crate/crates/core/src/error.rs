use thiserror::Error;

/// Errors produced by the lattice, obstruction, rewrite and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, expected {expected} entries per row")]
    NotSquare { rows: usize, expected: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("basis matrix is singular (determinant 0)")]
    Singular,

    #[error("empty basis: dimension must be positive")]
    EmptyBasis,

    #[error("resource limit exceeded: needs {required} operations, cap is {cap}")]
    ResourceLimit { required: String, cap: u64 },

    #[error("value does not fit in a 64-bit entry")]
    Overflow,

    #[error("subset is not non-acute: {0}")]
    NotNonAcute(String),

    #[error("subset is not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("torus parameters have mixed signs")]
    MixedSigns,

    #[error("torus parameter at position {0} is zero")]
    ZeroParameter(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
