use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("invalid subset: {0}")]
    Subset(String),

    #[error("invalid ranked partition: {0}")]
    Partition(String),

    #[error("invalid ranked chain: {0}")]
    Chain(String),

    #[error("not a matroid: {0}")]
    NotMatroid(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid point configuration: {0}")]
    Configuration(String),

    #[error("base vertex is not a basis of the common cell: {0}")]
    BaseNotInCommonCell(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
