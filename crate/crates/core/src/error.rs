use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra `{0}`")]
    UnsupportedAlgebra(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("operands belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("Weyl group of {algebra} has {size} elements, above the enumeration guard {limit}")]
    WeylGroupTooLarge {
        algebra: String,
        size: u128,
        limit: u128,
    },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource guard exceeded: {0}")]
    ResourceExceeded(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
