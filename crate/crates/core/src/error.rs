use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {label}{rank}")]
    InvalidType { label: char, rank: usize },

    #[error("unknown type label '{0}'")]
    UnknownLabel(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    RootIndex { index: usize, rank: usize },

    #[error("{0} is simply laced: no folding")]
    NoFolding(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Domain(String),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("element does not lie in {0}")]
    NotInSubspace(String),

    #[error("{0} is not a good prime for this family")]
    BadPrime(u32),

    #[error("enumeration would visit {points} points (limit {limit})")]
    TooManyPoints { points: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
