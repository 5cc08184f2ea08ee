use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Entries are not distinct positive integers.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// An exhaustive sweep was asked to go past its configured ceiling.
    #[error("input size {size} exceeds the exhaustive bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    /// A hook endpoint does not name a position of the host permutation.
    #[error("hook ({sw} -> {ne}) out of range for a host of length {len}")]
    HookOutOfRange { sw: usize, ne: usize, len: usize },

    /// The hooks fail one of the validity conditions.
    #[error("invalid hook configuration: {0}")]
    InvalidConfiguration(String),

    /// The top-hook decomposition needs at least one hook.
    #[error("decomposition undefined: the configuration has no hooks")]
    DecompositionUndefined,

    /// The operation only makes sense for uniquely sorted permutations.
    #[error("permutation is not uniquely sorted")]
    NotUniquelySorted,

    /// The eye statistic needs at least three entries.
    #[error("eye undefined for permutations of length {0}")]
    EyeUndefined(usize),

    /// The vertex has no leftmost cousin in this tree.
    #[error("no leftmost cousin: {0}")]
    NoLeftmostCousin(String),

    /// A matching was expected (every block of size exactly two).
    #[error("not a matching: {0}")]
    NotAMatching(String),

    /// Blocks do not partition the ground set, or indices are out of range.
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    /// A (partition, orientation) pair is outside the bijection's codomain.
    #[error("invalid partition/orientation pair: {0}")]
    InvalidPair(String),

    /// The operation requires a permutation of {1, …, n}.
    #[error("permutation is not normalized (entries must be exactly 1..=n)")]
    NotNormalized,

    /// A parameter is outside the function's domain.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Text could not be parsed as the requested object.
    #[error("parse error: {0}")]
    Parse(String),
}
