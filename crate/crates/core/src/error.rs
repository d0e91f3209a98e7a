use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameters a={a}, b={b}: {reason}")]
    InvalidParams { a: u32, b: u32, reason: String },

    #[error("unsupported variant: {0}")]
    Unsupported(String),

    #[error("insufficient precision: {0}")]
    Precision(String),

    #[error("verification failed: {summary}")]
    Verification {
        summary: String,
        context: serde_json::Value,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
