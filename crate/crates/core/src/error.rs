use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("Jacobi identity fails: d(dω^{j}) ≠ 0")]
    JacobiFailure { j: u8 },

    #[error("coefficient invariant violated: {0}")]
    InvariantViolation(String),

    #[error("metric is not positive definite")]
    NotPositiveDefinite,

    #[error("singular basis-change matrix")]
    SingularMatrix,

    #[error("classification requires a nilpotent Lie algebra of dimension 6")]
    ClassificationDomain,

    #[error("no catalog fingerprint matches")]
    NoCatalogMatch,
}
