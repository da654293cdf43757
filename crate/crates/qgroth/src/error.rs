//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by library operations.
///
/// Structural misuse that a caller can trigger with ordinary inputs (bad weight
/// literals, non-invariant elements, out-of-range Duflo–Serganova drops) is reported
/// through this type; internal invariant violations panic instead.
#[derive(Debug, Error)]
pub enum QError {
    /// A weight or element literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Two operands live over different ranks (different `n`) or incompatible bases.
    #[error("incompatible operands: {0}")]
    Incompatible(String),

    /// An element expected to be Weyl-invariant is not; the message names a witness.
    #[error("not W-invariant: {0}")]
    NotInvariant(String),

    /// A Duflo–Serganova drop exceeds the ambient rank.
    #[error("drop exceeds rank")]
    DropExceedsRank,

    /// A weight whose Weyl orbit contains no regular dominant representative was
    /// passed where one is required.
    #[error("orbit not regular-dominant: {0}")]
    NotRegularDominant(String),

    /// Division by zero or inversion of a non-invertible matrix.
    #[error("not invertible: {0}")]
    NotInvertible(String),

    /// A matrix-realization request exceeds the configured scale guard.
    #[error("oracle scale guard: {0}")]
    ScaleGuard(String),
}
