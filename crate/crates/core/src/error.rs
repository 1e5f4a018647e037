use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not invertible as a series: constant term {0} is not a unit")]
    NotInvertible(i64),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("non-integer column {0}; an integral diagram is required")]
    NonIntegerColumn(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("level-restricted objects need a positive integer kappa, got {0}")]
    LevelRequiresPositiveInteger(String),
    #[error("gcd(n, r) must be 1, got n={n}, r={r}")]
    GcdRequired { n: i64, r: i64 },
    #[error("kappa is not generic for this diagram")]
    GenericityRequired,
    #[error("{0} is not in Lambda^+_kappa, so L(lambda) has no weight decomposition (not in category O^h)")]
    NotInLambdaPlus(String),
    #[error("weight {0} is not anti-dominant with nonnegative first entry")]
    NotAntiDominant(String),
    #[error("tableau is not level restricted")]
    NotRestricted,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),
    #[error("contents of adjacent entries coincide at {0}; the module formula is undefined")]
    DegenerateContents(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
