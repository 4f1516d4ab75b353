use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter lies outside the range its operation accepts.
    #[error("domain error: {0}")]
    Domain(String),

    /// The instance violates a structural invariant (non-positive weight, length mismatch, ...).
    #[error("invalid instance: {0}")]
    Validation(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// No subset satisfies the feasibility structure.
    #[error("instance is infeasible: {0}")]
    Infeasible(String),

    #[error("instance has {n} items, brute force is limited to {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("dynamic program needs {cells} cells, budget is {budget}")]
    BudgetExceeded { cells: u128, budget: u128 },

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    /// A checked runtime invariant failed. Indicates a bug, not bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Io(err.to_string())
    }
}
