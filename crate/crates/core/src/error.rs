use thiserror::Error;

/// Errors raised by algebra construction and the numerical routines built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("algebra has no identity element (residual {residual:.3e})")]
    NoIdentity { residual: f64 },

    #[error("element is not invertible (singular value ratio {ratio:.3e})")]
    NotInvertible { ratio: f64 },

    #[error("inverse failed verification (two-sided residual {residual:.3e} exceeds bound {bound:.3e})")]
    ResidualFailure { residual: f64, bound: f64 },

    #[error("eigenvalue routine did not converge")]
    EigenFailure,

    #[error("the zero polynomial has no root factorization")]
    ZeroPolynomial,

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("semigroup index {index} out of range for {size} elements")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("semigroup is not a group")]
    NotAGroup,

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("matrix algebra size must be at least 1")]
    ZeroSize,

    #[error("form is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("form is degenerate (singular value ratio {ratio:.3e})")]
    Degenerate { ratio: f64 },

    #[error("star structure is not involutive (deviation {deviation:.3e})")]
    NotInvolutive { deviation: f64 },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
