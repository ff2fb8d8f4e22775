use thiserror::Error;

/// Errors surfaced by the numerical core.
#[derive(Debug, Error)]
pub enum SimError {
    /// A physical or state parameter violates its domain.
    #[error("invalid parameter: {0}")]
    Validation(String),

    /// Two fields or kernels live on different grids.
    #[error("grid mismatch: expected {expected}, got {got}")]
    GridMismatch { expected: String, got: String },

    /// A grid cannot resolve an oscillatory phase or envelope.
    #[error(
        "under-resolved {axis} axis: {points_per_osc:.2} points per oscillation, \
         need at least {required:.1}"
    )]
    UnderResolved {
        axis: String,
        points_per_osc: f64,
        required: f64,
    },

    /// A requested point or resampled support falls outside the grid.
    #[error("domain coverage: {0}")]
    DomainCoverage(String),

    /// An intermediate value left the representable / trustworthy range.
    #[error("numerical range: {what} at argument {argument}")]
    NumericalRange { what: String, argument: String },

    /// A result missed its accuracy target.
    #[error("accuracy: {what}: measured {measured:.3e} exceeds tolerance {tolerance:.3e}{hint}")]
    Accuracy {
        what: String,
        measured: f64,
        tolerance: f64,
        hint: String,
    },

    /// A quadrature produced a value that violates a hard bound.
    #[error("quadrature failure: {what} = {value:.6e} violates |value| <= {bound}")]
    QuadratureFailure {
        what: String,
        value: f64,
        bound: f64,
    },
}

impl SimError {
    pub fn validation(msg: impl Into<String>) -> Self {
        SimError::Validation(msg.into())
    }

    pub fn accuracy(what: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        SimError::Accuracy {
            what: what.into(),
            measured,
            tolerance,
            hint: String::new(),
        }
    }

    pub fn accuracy_hint(
        what: impl Into<String>,
        measured: f64,
        tolerance: f64,
        hint: impl Into<String>,
    ) -> Self {
        SimError::Accuracy {
            what: what.into(),
            measured,
            tolerance,
            hint: format!(" ({})", hint.into()),
        }
    }
}

pub type Result<T> = std::result::Result<T, SimError>;
