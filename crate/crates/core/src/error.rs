use thiserror::Error;

use crate::subset_bound::HypothesisCheck;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generators must be positive")]
    ZeroGenerator,

    #[error("generators not coprime (gcd = {gcd})")]
    NotCofinite { gcd: u64 },

    /// The operation is meaningless on the semigroup of all non-negative integers.
    #[error("operation undefined for the full semigroup N")]
    DegenerateSemigroup,

    #[error("{value} is not representable over the given generators")]
    NotRepresentable { value: u64 },

    #[error("subset-bound hypotheses violated: {0:?}")]
    HypothesesViolated(HypothesisCheck),

    #[error("embedding dimension k = {k} must exceed 2")]
    InvalidK { k: u64 },

    #[error("epsilon must be positive")]
    NonPositiveEpsilon,

    #[error("box has {points} lattice points, limit is {limit}")]
    GuardExceeded { points: u128, limit: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
