use thiserror::Error;

/// Errors surfaced by the verification library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// An exhaustive enumeration would exceed its configured bound.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// A textual input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// An input presented as coalitionally strategy-proof failed a check
    /// that every such function must pass.
    #[error("input is not coalitionally strategy-proof: {0}")]
    NotCsp(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: msg.into(),
        }
    }

    pub fn not_csp(msg: impl Into<String>) -> Self {
        Error::NotCsp(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
