use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The computation would exceed its configured budget.
    #[error("resource budget exceeded: {what} needs {attempted}, budget is {budget}")]
    Resource {
        what: String,
        attempted: u128,
        budget: u128,
    },
    /// Malformed decision tree.
    #[error("structural error: {0}")]
    Structural(String),
    /// A precondition of a constructive procedure does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Should be unreachable; firing means a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn resource(what: impl Into<String>, attempted: u128, budget: u128) -> Self {
        Error::Resource {
            what: what.into(),
            attempted,
            budget,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}
