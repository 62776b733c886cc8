use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {0} is outside the supported range 1..={max}", max = crate::MAX_QUBITS)]
    UnsupportedQubits(usize),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigenvalue {0:e} is below the roundoff floor of -1e-10")]
    NegativeEigenvalue(f64),

    #[error("spectrum sums to {0}, expected 1")]
    Unnormalized(f64),

    #[error("matrix decomposition failed: {0}")]
    Decomposition(String),

    /// The fitted parabola has no interior maximum. Carries the points that
    /// were fitted so the caller can inspect the sweep.
    #[error("no interior peak: {reason}")]
    NoInteriorPeak {
        reason: String,
        points: Vec<(f64, f64)>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
