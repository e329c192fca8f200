//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TowerError {
    #[error("invalid permutation window {0}")]
    InvalidPermutation(String),
    #[error("invalid composition {0}: parts must be positive")]
    InvalidComposition(String),
    #[error("invalid partition {0}: parts must be positive and weakly decreasing")]
    InvalidPartition(String),
    #[error("word {0} has repeated letters")]
    RepeatedLetters(String),
    #[error("invalid TS word {0:?}")]
    InvalidTsWord(String),
    #[error("words {0} share letters; shuffles need disjoint alphabets")]
    OverlappingAlphabets(String),
    #[error("split index {k} out of range 0..={max}")]
    SplitOutOfRange { k: usize, max: usize },
    #[error("degree {degree} exceeds cap {cap} for {what}")]
    DegreeCap {
        degree: usize,
        cap: usize,
        what: String,
    },
    #[error("invalid algebra presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("induced module inconsistent: {0}")]
    InductionInconsistent(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("module basis rank-deficient: {0}")]
    RankDeficient(String),
    #[error("antipode verification failed: {0}")]
    AntipodeVerification(String),
    #[error("structure constants out of range: {0}")]
    BadStructureConstants(String),
    #[error("isomorphism test inconclusive: {0}")]
    IsoInconclusive(String),
    #[error("unknown {kind} {value:?}")]
    UnknownName { kind: &'static str, value: String },
    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

pub type Result<T> = std::result::Result<T, TowerError>;
