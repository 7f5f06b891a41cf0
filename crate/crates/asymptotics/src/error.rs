use thiserror::Error;

/// Failures of the asymptotic evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("n = {n} exceeds the exact-table budget {budget}")]
    BudgetExceeded { n: usize, budget: usize },
}
