use thiserror::Error;

/// Errors produced by code and coset operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("coordinate {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation requires a nonzero code")]
    ZeroCode,
    #[error("extension degree {0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("modulus {0} must be odd")]
    EvenModulus(u32),
    #[error("{n} does not divide 2^{s} - 1")]
    BadSubgroupOrder { n: u32, s: u32 },
    #[error("residue {a} out of range for modulus {n}")]
    BadResidue { a: u32, n: u32 },
    #[error("set not closed under doubling mod {n}: {elem} present, {missing} absent")]
    NotDoublingClosed { n: u32, elem: u32, missing: u32 },
    #[error("coset sets disagree on modulus or extension flag")]
    CosetMismatch,
    #[error("empty set has no amplitude")]
    EmptySet,
    #[error("enumeration of a dimension-{dim} space exceeds the 2^{cap} cap")]
    CapacityExceeded { dim: usize, cap: usize },
    #[error("not a CSS-T pair")]
    NotCsstPair,
    #[error("invalid coset leader {leader} mod {n}; valid leaders: {valid:?}")]
    InvalidLeader {
        leader: u32,
        n: u32,
        valid: Vec<u32>,
    },
    #[error("seed set for t={t} fails its own triple-sum condition")]
    GreedySeed { t: usize },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
