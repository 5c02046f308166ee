use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by matrix construction, spectral routines and the
/// higher-level witness operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds 1e-12")]
    NotHermitian { residual: f64 },

    #[error("non-finite entry encountered")]
    NonFinite,

    #[error("invalid matrix dimension {0}")]
    InvalidDimension(usize),

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("state is not normalized: |norm - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("invalid density matrix: {reason}")]
    InvalidDensity { reason: String },

    #[error("expectation value has imaginary residual {residual:.3e}")]
    ImaginaryResidual { residual: f64 },

    #[error("unknown pair id `{0}` (expected pair295, pair759 or two_qubit)")]
    UnknownPairId(String),

    #[error("embedding plan expects {expected} slots, got {found}")]
    SlotCountMismatch { expected: usize, found: usize },

    #[error("slot {index} must be 2x2, got dimension {dim}")]
    SlotDimension { index: usize, dim: usize },

    #[error(
        "ordering violation: ground minimum {ground:.7e} is not strictly below filler minimum {filler:.7e}"
    )]
    OrderingViolation { ground: f64, filler: f64 },

    #[error("slot structure violation: {reason}")]
    StructureViolation { reason: String },

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),

    #[error("temperature grid must be nonempty and strictly positive")]
    InvalidGrid,

    #[error("invalid search configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("no feasible point found across all restarts")]
    NoFeasiblePoint,

    #[error("malformed input: {reason}")]
    Malformed { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
