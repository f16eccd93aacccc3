use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("feasible set is unbounded: {0}")]
    Unbounded(String),

    #[error("polytope is not full-dimensional")]
    NotFullDimensional,

    #[error("duplicate interpolation nodes")]
    DuplicateNodes,

    #[error("not a lattice polytope: {0}")]
    NotLatticePolytope(String),

    #[error("fan is not complete: {0}")]
    NotComplete(String),

    #[error("divisor is not Cartier: {0}")]
    NotCartier(String),

    #[error("divisor is not ample")]
    NotAmple,

    #[error("ambient dimension {0} is below the theorem threshold {1}")]
    DimensionTooSmall(usize, usize),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("empty graded piece")]
    EmptyGradedPiece,

    #[error("moduli identification unavailable: d(X) < 0")]
    ModuliIdentificationUnavailable,

    #[error("problem too large for exact computation: {0}")]
    TooLarge(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
