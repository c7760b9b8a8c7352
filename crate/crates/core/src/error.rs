//! Error taxonomy shared by all modules.

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    /// Malformed input: wrong lengths, non-monotone signatures, q = 0, ...
    #[error("argument error: {0}")]
    Argument(String),

    /// Input is structurally fine but outside the domain of the formula
    /// (excluded evaluation points, branch violations, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Both determinants of a confluent ratio vanished; reports the point.
    #[error("singular specialization: {0}")]
    Singular(String),

    /// A hard cap (enumeration size, exact-sampler candidates) was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An iterative solver failed to converge; carries a short trace.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Requested accuracy is unreachable at the allowed precision.
    #[error("precision error: {0}")]
    Precision(String),

    /// Logarithm branch could not be fixed by continuity.
    #[error("branch error: {0}")]
    Branch(String),

    /// Contour quadrature failed (pole on contour, divergent samples).
    #[error("quadrature error: {0}")]
    Quadrature(String),

    /// A determinant formula was asked to divide by a vanishing Vandermonde.
    #[error("degeneracy error: {0}")]
    Degenerate(String),

    /// Two routes that must agree do not, beyond any convention freedom.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    /// A certified truncation tail bound exceeds the requested tolerance.
    #[error("truncation error: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
