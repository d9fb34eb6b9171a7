use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image {image} of state {state} out of range for degree {degree}")]
    ImageOutOfRange {
        state: usize,
        image: usize,
        degree: usize,
    },

    #[error("a transformation needs at least one state")]
    EmptyDomain,

    #[error("not a permutation")]
    NotAPermutation,

    #[error("state space too large: {n} states exceeds limit {limit}")]
    StateSpaceTooLarge { n: usize, limit: usize },

    #[error("transformation monoid exceeds cap of {cap} elements")]
    MonoidTooLarge { cap: usize },

    #[error("degenerate: need at least 2 states, got {n}")]
    Degenerate { n: usize },

    #[error("k = {k} out of range for degree {n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("rank {rank} out of range for degree {n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("degree {n} unsupported here (need {min} <= n <= {max})")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),
}
