use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range caller input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The brute-force enumeration would exceed its configured budget.
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An internal invariant was violated; indicates a bug upstream.
    #[error("invariant violation: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
