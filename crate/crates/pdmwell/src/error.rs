use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation
    /// (e.g. a position at or below the infinite wall, or an invalid
    /// polynomial parameter).
    #[error("domain error: {0}")]
    Domain(String),

    /// A level index at or above the number of bound states.
    #[error("level n={n} out of range: bound_count={bound_count}")]
    LevelOutOfRange { n: usize, bound_count: usize },

    /// Well parameters that admit no bound state at all.
    #[error("no bound state: {0}")]
    NoBoundState(String),

    /// A constructor argument violating its stated constraint.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Mismatched vector/grid lengths.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An iterative solver failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A solver configuration that cannot produce a trustworthy answer
    /// (e.g. a truncation radius that visibly cuts into a bound state).
    #[error("inadequate configuration: {0}")]
    Configuration(String),

    /// Output stream failure while writing results.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
