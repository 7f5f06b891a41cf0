use num_bigint::BigInt;
use thiserror::Error;

/// Failures of series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The series to invert does not start with `±1`.
    #[error("constant term {0} is not a unit (must be +1 or -1)")]
    NonUnitConstantTerm(BigInt),
    /// A q-Pochhammer factor with `start == 0` or `step == 0`.
    #[error("invalid q-Pochhammer factor (start {start}, step {step}): both must be positive")]
    InvalidPochSpec { start: u64, step: u64 },
    /// A series must hold at least the constant coefficient.
    #[error("a series needs at least one coefficient")]
    Empty,
}
