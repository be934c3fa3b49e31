use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient rank {0} exceeds the supported maximum of 16")]
    RankTooLarge(usize),
    #[error("mismatched ambient rank: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("subsets overlap")]
    Overlapping,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parabolic subgroup of order {0} exceeds the iteration guard")]
    SubgroupTooLarge(u128),
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("representation check failed: {0}")]
    Representation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}
