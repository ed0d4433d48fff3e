//! Error type shared by every module of the toolkit.

use thiserror::Error;

/// Errors surfaced by the numerical and exact-arithmetic operations.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration field failed validation. `field` is a dotted path
    /// into the offending config block.
    #[error("validation error at `{field}`: {message}")]
    Validation { field: String, message: String },

    /// A quadrature or integrator could not reach the requested accuracy.
    #[error("accuracy error: requested {requested:.3e}, achieved {achieved:.3e}")]
    Accuracy { requested: f64, achieved: f64 },

    /// The radial boundary solution nearly vanished at the outer sphere,
    /// i.e. the configuration sits numerically at an interior eigenvalue.
    #[error("near-eigenvalue at degree {degree}: boundary magnitude {magnitude:.3e}")]
    NearEigenvalue { degree: usize, magnitude: f64 },

    /// A spherical-harmonic expansion was truncated before the geometric
    /// tail of the point-source trace fell below tolerance.
    #[error("degree cap too small: tail tolerance needs max_degree >= {required}")]
    TailTolerance { required: usize },

    /// Two fields or grids that must match do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn validation(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: msg.into(),
        }
    }

    /// Process exit code used by the command-line interface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation { .. } | Error::Domain(_) | Error::GridMismatch(_) => 2,
            Error::Accuracy { .. } | Error::TailTolerance { .. } => 3,
            Error::NearEigenvalue { .. } => 4,
            Error::Io(_) | Error::Json(_) | Error::Csv(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
