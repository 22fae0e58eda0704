use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("size mismatch: expected partitions of {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("missing right-hand side for partition ({0})")]
    MissingEntry(String),

    #[error("polynomial is not balanced: term u^{u}v^{v}")]
    NotBalanced { u: u32, v: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("point counts are not realizable: {0}")]
    NonRealizable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
