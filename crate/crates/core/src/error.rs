use thiserror::Error;

/// Errors produced by matrix construction, decomposition and the
/// inequality-checking pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error(
        "matrix is not Hermitian: max |M[i,j] - conj(M[j,i])| = {deviation:.3e} exceeds {tolerance:.1e}"
    )]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("density matrix must have unit trace within {tolerance:.1e}: got trace {trace:.17}")]
    TraceNotOne { trace: f64, tolerance: f64 },

    #[error("matrix must be traceless within {tolerance:.1e}: got |trace| {trace:.3e}")]
    NotTraceless { trace: f64, tolerance: f64 },

    #[error(
        "eigenvalue {eigenvalue:.6e} lies below the admitted floor {floor:.1e}; the state is not strictly positive enough"
    )]
    EigenvalueBelowFloor { eigenvalue: f64, floor: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps: off-diagonal residual {residual:.3e} (threshold {threshold:.3e})"
    )]
    NoConvergence {
        sweeps: usize,
        residual: f64,
        threshold: f64,
    },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("no violation found on grid: {0}")]
    NoViolationFound(String),

    #[error("internal consistency check failed: {0}")]
    ConsistencyCheck(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("malformed matrix file {path}: {reason}")]
    MalformedFile { path: String, reason: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
