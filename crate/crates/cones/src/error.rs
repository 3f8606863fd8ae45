use std::fmt;

/// Errors raised by the workbench library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A structural precondition of an operation failed.
    Precondition(String),
    /// The configured assignment-space ceiling was exceeded before the
    /// search space was exhausted. Distinct from "no solution found".
    SearchCeiling { ceiling: u64, required: u64 },
    /// The operation needs a completed rewriting system but completion was
    /// capped before reaching confluence.
    CappedSystem,
    /// An order query in the base monoid could not be decided.
    UndecidedOrder(String),
    /// Malformed input (file parsing and friends); carries a line number.
    Parse { line: usize, message: String },
    /// A hard verification failure: something the construction guarantees
    /// did not hold.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::SearchCeiling { ceiling, required } => write!(
                f,
                "search space of {required} assignments exceeds ceiling {ceiling}"
            ),
            Error::CappedSystem => {
                write!(f, "rewriting system is capped; word problem undecided")
            }
            Error::UndecidedOrder(msg) => write!(f, "order query undecided: {msg}"),
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
