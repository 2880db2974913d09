use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {reason}")]
    Format { line: usize, reason: String },

    #[error("duplicate edge between vertices {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("edge ({u}, {v}) has weight {weight:e}, below the minimum magnitude {min:e}")]
    DegenerateWeight { u: usize, v: usize, weight: f64, min: f64 },

    #[error("graph is not connected")]
    NotConnected,

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("Laplacian has a {n_zero}-dimensional kernel; reduced determinant is 0 by convention")]
    DegenerateKernel { n_zero: usize },

    #[error("cycle form is singular")]
    SingularCycleForm,

    #[error("pole of the stability indicator: |cos zeta| = {0:e}")]
    Pole(f64),

    #[error("no root of the stability indicator in (0, pi/2)")]
    NoRoot,

    #[error("residual {residual:e} exceeds tolerance {tol:e}; not a fixed point")]
    NotAFixedPoint { residual: f64, tol: f64 },

    #[error("invalid spec: {0}")]
    Spec(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
