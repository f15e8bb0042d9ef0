use thiserror::Error;

#[derive(Debug, Error)]
pub enum CdError {
    #[error("doubling parameter gamma must be nonzero")]
    ZeroGamma,
    #[error("tolerance must be nonnegative")]
    NegativeTolerance,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element has zero or isotropic norm, no inverse")]
    IsotropicNorm,
    #[error("operation rejects the zero element")]
    ZeroElement,
    #[error("companion coefficient has a nonscalar part beyond tolerance")]
    NonScalarCompanion,
    #[error("root iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("no root found for the current quotient")]
    RootNotFound,
    #[error("operation requires a division algebra of dimension at most 8, got dimension {0}")]
    DimensionTooLarge(usize),
    #[error("operation requires float scalar mode")]
    FloatModeRequired,
    #[error("operation requires a quadratic polynomial")]
    NotQuadratic,
    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("matrix is not triangular")]
    NotTriangular,
    #[error("matrix entry b must be {0}")]
    BadCorner(&'static str),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix entries do not associate; inversion is only valid over an associative subalgebra")]
    NotAssociative,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("basis index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CdError>;
