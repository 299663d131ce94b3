//! Error type shared by every module in the crate.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when constructing values or running
/// verifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A matrix was constructed with a NaN or infinite entry, or with a
    /// data length that does not match `rows * cols`.
    InvalidConstruction(&'static str),
    /// The iterative SVD kernel failed to converge within its sweep cap;
    /// signals numerically pathological input.
    ConvergenceFailure { sweeps: usize },
    /// Requested rank exceeds `min(rows, cols)`.
    RankOutOfRange { requested: usize, max: usize },
    /// Tensor embedding would exceed the supported size cap.
    SizeCap { dim: usize, cap: usize },
    /// A seeded sample was repeatedly degenerate (astronomically unlikely).
    DegenerateSample,
    /// Tuple entries, marks, permutation, or exponents are inconsistent.
    InvalidTuple(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} is incompatible with {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::InvalidConstruction(msg) => write!(f, "invalid matrix construction: {msg}"),
            Error::ConvergenceFailure { sweeps } => {
                write!(f, "SVD did not converge within {sweeps} sweeps")
            }
            Error::RankOutOfRange { requested, max } => {
                write!(f, "requested rank {requested} exceeds maximum {max}")
            }
            Error::SizeCap { dim, cap } => {
                write!(f, "embedded dimension {dim} exceeds cap {cap}")
            }
            Error::DegenerateSample => write!(f, "random sample degenerate after retries"),
            Error::InvalidTuple(msg) => write!(f, "invalid tuple: {msg}"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}
