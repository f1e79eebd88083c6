use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid {kind}: {detail}")]
    Invalid { kind: &'static str, detail: String },
    #[error("size {requested} exceeds the configured limit {limit} for {what}")]
    LimitExceeded {
        what: String,
        requested: usize,
        limit: usize,
    },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("truncation N={given} is too small, need at least {needed}")]
    TruncationTooSmall { given: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(kind: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            kind,
            detail: detail.into(),
        }
    }
}
