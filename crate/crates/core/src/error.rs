use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,

    #[error("illegal character {ch:?} at position {position} (expected one of I, X, Y, Z)")]
    IllegalPauliChar { ch: char, position: usize },

    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected} amplitudes, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("term count {requested} exceeds cap {cap}")]
    Capacity { requested: u128, cap: usize },

    #[error("{n} qubits exceeds the dense limit of {limit}")]
    DenseLimit { n: usize, limit: usize },

    #[error("{n} qubits is too many for a state vector")]
    TooManyQubits { n: usize },

    #[error("iteration did not converge after {iterations} steps (residual {residual:e}, estimate {estimate})")]
    NotConverged {
        iterations: usize,
        residual: f64,
        estimate: f64,
    },

    #[error("operation requires a nonzero Hamiltonian")]
    ZeroHamiltonian,

    #[error("imaginary residue {residue:e} did not cancel")]
    ImaginaryResidue { residue: f64 },

    #[error("operator norm precondition violated: {0}")]
    NormPrecondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
