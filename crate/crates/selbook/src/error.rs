//! Error type shared by every module.

use std::fmt;

/// Everything that can go wrong when building shapes or evaluating counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A shape parameter is structurally invalid (empty, non-monotone, …).
    InvalidShape(String),
    /// A filling does not match the shape or violates its constraints.
    InvalidFilling(String),
    /// A word over the Selberg alphabet is not a Selberg permutation.
    InvalidPermutation(String),
    /// Textual shape notation failed to parse.
    Parse(String),
    /// An operation was asked outside its stated domain.
    Unsupported(String),
    /// The work would exceed the configured enumeration budget.
    BudgetExceeded(String),
    /// An expression that must be an integer evaluated to a proper fraction.
    NonIntegral(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidShape(msg) => write!(f, "invalid shape: {msg}"),
            Error::InvalidFilling(msg) => write!(f, "invalid filling: {msg}"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::BudgetExceeded(msg) => write!(f, "budget exceeded: {msg}"),
            Error::NonIntegral(msg) => write!(f, "non-integral result: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
