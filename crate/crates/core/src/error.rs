//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A genus below 2 has no polarized K3 model here.
    #[error("invalid genus: {0}")]
    InvalidGenus(String),

    /// The vector lies outside the region of non-empty moduli.
    #[error("Mukai vector {0} is not in the region H: {1}")]
    NotInRegion(String, String),

    /// A stated precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Matrix shapes do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The endomorphism does not square to zero.
    #[error("endomorphism is not square-zero")]
    NotSquareZero,

    /// The endomorphism is square-zero but of deficient rank, so the
    /// birational inverse of the resolution is undefined there.
    #[error("endomorphism lies off the dense orbit: rank {rank} < {expected}")]
    OffDenseOrbit { rank: usize, expected: usize },

    /// A collineation chain violating the chain rules was supplied.
    #[error("invalid collineation chain: {0}")]
    InvalidChain(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
