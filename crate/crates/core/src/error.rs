use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
    #[error("precision exhausted: {what} still undecided at {cap_bits} bits")]
    PrecisionExhausted { what: String, cap_bits: u32 },
    #[error("term cap exceeded: {terms} terms requested, cap is {cap}")]
    CapExceeded { terms: String, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
