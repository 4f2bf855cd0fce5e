use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid step character {0:?} (expected 'N' or 'E')")]
    InvalidStepChar(char),
    #[error("empty path")]
    EmptyPath,
    #[error("path is not in L(n,n): {0}")]
    NotSquare(String),
    #[error("path is not a Dyck path")]
    NotDyck,
    #[error("path is not a ballot path")]
    NotBallot,
    #[error("invalid area vector: {0}")]
    InvalidAreaVector(String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid diagonal word: {0}")]
    InvalidDiagonalWord(String),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("not a parking function: {0}")]
    NotParkingFunction(String),
    #[error("set of roots is not an antichain")]
    NotAntichain,
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("invalid Shi pair: {0}")]
    InvalidShiPair(String),
    #[error("rank {n} exceeds the configured bound {max}")]
    RankTooLarge { n: usize, max: usize },
    #[error("no preimage found for path {0}")]
    MissingPreimage(String),
    #[error("corrupt table file: {0}")]
    CorruptTable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
