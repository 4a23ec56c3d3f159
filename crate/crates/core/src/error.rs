use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing and positive")]
    InvalidPartition(Vec<usize>),

    #[error("cannot parse partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeExceedsTruncation { degree: usize, truncation: usize },

    #[error("{partition} has weight {}, expected {expected}", partition.weight())]
    WeightMismatch {
        partition: Partition,
        expected: usize,
    },

    #[error("S(1) - 1 needs truncation at least 1")]
    ZeroTruncation,

    /// A negative Schur coefficient in a slice that must be a character.
    #[error("negative multiplicity {mult} of {partition} in degree {degree}")]
    NegativeMultiplicity {
        partition: Partition,
        mult: i64,
        degree: usize,
    },

    #[error("split k = {k} out of range for degree {degree}")]
    SplitOutOfRange { k: usize, degree: usize },

    #[error("restriction is only implemented for UT2F, not {0}")]
    UnsupportedAlgebra(String),

    #[error("unknown formula {0:?}")]
    UnknownFormula(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("missing proper slice of degree {0}")]
    MissingSlice(usize),
}
