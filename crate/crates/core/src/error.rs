use thiserror::Error;

pub type Result<T> = std::result::Result<T, KuiperError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KuiperError {
    #[error("no fixed point within {iterations} iterations (last iterate {last})")]
    NonConvergence { iterations: usize, last: f64 },

    #[error("invalid evaluation at c = {c}: {reason}")]
    NumericalDomain { c: f64, reason: &'static str },

    #[error("finite-difference slope {slope:e} at c = {c} is too close to zero")]
    DerivativeNearZero { c: f64, slope: f64 },

    #[error("root c = {c} violates the necessary condition c > 1/2")]
    InadmissibleRoot { c: f64 },

    #[error("exp(c^2) is not representable at c = {c}")]
    Overflow { c: f64 },

    #[error("the quantile at probability 1 is unbounded")]
    UnboundedQuantile,

    #[error("input is empty")]
    EmptyInput,

    #[error("input is not sorted ascending at index {index}")]
    UnsortedInput { index: usize },

    #[error("value {value} at index {index} is outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },

    #[error("samples have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl KuiperError {
    /// Stable variant name, used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            KuiperError::NonConvergence { .. } => "NonConvergence",
            KuiperError::NumericalDomain { .. } => "NumericalDomain",
            KuiperError::DerivativeNearZero { .. } => "DerivativeNearZero",
            KuiperError::InadmissibleRoot { .. } => "InadmissibleRoot",
            KuiperError::Overflow { .. } => "Overflow",
            KuiperError::UnboundedQuantile => "UnboundedQuantile",
            KuiperError::EmptyInput => "EmptyInput",
            KuiperError::UnsortedInput { .. } => "UnsortedInput",
            KuiperError::OutOfRange { .. } => "OutOfRange",
            KuiperError::LengthMismatch { .. } => "LengthMismatch",
            KuiperError::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
