use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The two words admit no nonempty prefixes of equal weight. Only
    /// possible when the weight hypothesis of the matcher is violated.
    #[error("no equal-weight prefixes: {0}")]
    NoMatch(String),

    #[error("word or parameters outside the domain of the map: {0}")]
    NotInDomain(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid parameter: {0}")]
    ParameterError(String),

    #[error("unsupported argument: {0}")]
    UnsupportedArgument(String),

    #[error("enumeration of words of length {length} exceeds the cap of {cap}")]
    CapExceeded { length: i64, cap: usize },

    #[error("work estimate {estimate} exceeds the cap of {cap}")]
    WorkCapExceeded { estimate: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}
