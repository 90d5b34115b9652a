use thiserror::Error;

/// Errors raised across the library.
///
/// Variants are grouped so the command-line front end can map them onto
/// its exit codes: input problems, numerical non-convergence and resource
/// caps.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed token {token:?}: {reason}")]
    Malformed { token: String, reason: String },

    #[error("loop edge {0}-{0} is not allowed")]
    LoopEdge(String),

    #[error("vertex {vertex} out of range for {k} vertices")]
    VertexOutOfRange { vertex: usize, k: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ministring set is not postfix-free: {suffix} is a suffix of {word}")]
    NotPostfixFree { suffix: String, word: String },

    #[error("word {0} does not decompose into ministrings")]
    NotDecomposable(String),

    #[error("characteristic equation has no root in (0,1)")]
    NoRoot,

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: u128, cap: u128 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn malformed(token: &str, reason: impl Into<String>) -> Self {
        Error::Malformed {
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
