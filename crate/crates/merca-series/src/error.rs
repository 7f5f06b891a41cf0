use thiserror::Error;

/// Failures of parameter normalisation, series construction and scanning.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MercaError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    /// The requested denominator does not belong to the parameter case.
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("scan range [{lo}, {hi}] is not inside [0, {order}]")]
    Range { lo: usize, hi: usize, order: usize },
}
