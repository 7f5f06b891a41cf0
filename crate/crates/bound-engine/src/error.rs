use merca_series::MercaError;
use thiserror::Error;

/// Failures of bound evaluation and threshold computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("unknown polynomial {family}{index}")]
    UnknownPolynomial { family: char, index: usize },
    /// The bound argument needs a positive leading coefficient in `p`.
    #[error("leading coefficient of {0} is not positive")]
    LeadingNotPositive(String),
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error(transparent)]
    Series(#[from] MercaError),
}
