use thiserror::Error;

/// Errors surfaced by constructors and calculators.
///
/// Every operation on already-validated values is total; errors only
/// arise when building values from raw input or when a precondition
/// (rank bounds, equal sizes) is genuinely violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("dominance needs equal sizes, got {0} and {1}")]
    DominanceSizeMismatch(u64, u64),

    #[error("invalid Grassmannian context: need 1 <= l < m, got l={l}, m={m}")]
    InvalidContext { l: u32, m: u32 },

    #[error("weight has {got} entries, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("weight block {0:?} is not weakly decreasing")]
    WeightBlockOrder(Vec<i64>),

    #[error("partition {0:?} has more than {1} rows")]
    TooManyRows(Vec<u32>, u32),

    #[error("exterior power degree {degree} exceeds rank {rank}")]
    ExteriorDegree { degree: u32, rank: u32 },

    #[error("sequence entry {entry} outside [0, {max}]")]
    SequenceEntry { entry: u32, max: u32 },

    #[error("sequence {0:?} is not weakly decreasing")]
    SequenceOrder(Vec<u32>),

    #[error("sequence has {got} entries, expected {expected}")]
    SequenceLength { got: usize, expected: usize },

    #[error("cannot parse partition literal {literal:?}: {reason}")]
    PartitionLiteral { literal: String, reason: String },

    #[error("cannot parse weight literal {literal:?}: {reason}")]
    WeightLiteral { literal: String, reason: String },
}
