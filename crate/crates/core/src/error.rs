use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the invariant pipelines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("validation: {0}")]
    Validation(String),

    /// The equivariant signature is undefined because the evaluation point
    /// is a root of the Alexander polynomial.
    #[error("Alexander root: the equivariant form is singular at m/n = {m}/{n}")]
    AlexanderRoot { m: u64, n: u64 },

    /// A numeric eigenvalue landed inside the guard band around the zero
    /// threshold, so the inertia counts cannot be trusted.
    #[error(
        "indeterminate signature: eigenvalue {eigenvalue:.6e} inside the guard band around {threshold:.6e}"
    )]
    IndeterminateSignature { eigenvalue: f64, threshold: f64 },

    /// A GF(2) linear system has no unique solution.
    #[error("singular GF(2) system: rank defect {rank_defect}")]
    Gf2Singular { rank_defect: usize },

    /// Two pipelines that must agree did not, or a guaranteed postcondition
    /// failed. Always a bug, never a property of the input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Stable machine-readable code, kept alongside the prose message in
    /// serialized error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Validation(_) => "validation",
            Error::AlexanderRoot { .. } => "alexander_root",
            Error::IndeterminateSignature { .. } => "indeterminate_signature",
            Error::Gf2Singular { .. } => "gf2_singular",
            Error::Internal(_) => "internal",
        }
    }
}
