use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid subset {elements:?}: {reason}")]
    InvalidSubset { elements: Vec<u32>, reason: String },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("integer overflow while computing {0}")]
    Overflow(String),

    #[error("rank {rank} out of range for {r}-subsets (bound {bound})")]
    RankOutOfRange { rank: u64, r: u32, bound: String },

    #[error("point {point} is not covered by any block")]
    Uncoverable { point: String },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
