use thiserror::Error;

/// Errors raised by the partition and representation computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },

    #[error("partition has {parts} parts but at most {max} are allowed")]
    TooManyParts { parts: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("letter multiplicities {0:?} do not form a partition")]
    NotPartitionWeight(Vec<usize>),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid dihedral character: {0}")]
    InvalidCharacter(String),

    #[error("cyclotomic coefficient does not reduce to a rational: {0}")]
    NonRational(String),

    #[error("variable budget exceeded: {nvars} variables requested, limit is {limit}")]
    VariableBudget { nvars: usize, limit: usize },

    #[error("inconsistent system: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::TooManyParts { .. } => "too_many_parts",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::NotPartitionWeight(_) => "not_partition_weight",
            Error::Domain(_) => "domain",
            Error::InvalidCharacter(_) => "invalid_character",
            Error::NonRational(_) => "non_rational",
            Error::VariableBudget { .. } => "variable_budget",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
