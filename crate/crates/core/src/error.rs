//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by kinematic evaluation, assembly and the solver.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violated a precondition (non-finite entries, bad sizes,
    /// a matrix that is not a rotation, invalid parameter ranges, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A state left the admissible set: the orientation functional (or the
    /// membrane area ratio) is non-positive at a quadrature point.
    #[error("infeasible state: J = {j:.6e} <= 0 at quadrature point {point} of element {element}")]
    InfeasibleState {
        element: usize,
        point: usize,
        j: f64,
    },

    /// A geometric quantity degenerated (zero director, zero surface normal).
    #[error("degenerate state: {0}")]
    DegenerateState(String),

    /// Mismatched array lengths between mesh and fields.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn degenerate(msg: impl Into<String>) -> Self {
        Error::DegenerateState(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
