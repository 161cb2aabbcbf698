use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("rewrite guard exceeded: more than {bound} intermediate terms")]
    GuardExceeded { bound: usize },

    #[error("presentation `{presentation}` has no rule for `{left} {right}`")]
    MissingRule { presentation: String, left: String, right: String },

    #[error("evaluation error: {0}")]
    Eval(String),

    #[error("json error: {0}")]
    Json(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
