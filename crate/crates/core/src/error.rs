use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge: estimate {value}, error estimate {error:e} > tolerance {tol:e}")]
    QuadratureFailed { value: f64, error: f64, tol: f64 },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("power series: {0}")]
    Series(String),

    #[error("scan budget exceeded in branch {branch}: {detail}")]
    ScanBudget { branch: String, detail: String },

    #[error("spectrum cache: {0}")]
    Cache(String),
}

impl Error {
    /// True for errors caused by bad input rather than numerical trouble.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::InvalidMaterial(_) | Error::InvalidArgument(_) | Error::Cache(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
