use thiserror::Error;

/// Failures of partition-table construction and bound evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part sizes must be positive")]
    ZeroPart,
    #[error("part {0} occurs more than once")]
    DuplicatePart(u64),
    #[error("{a1} and {a2} are not coprime")]
    NotCoprime { a1: u64, a2: u64 },
    /// The requested lemma does not apply to these parameters.
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
}
