use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("projective point with both coordinates zero")]
    ZeroProjectivePoint,
    #[error("limit of a ratio with zero denominator series")]
    ZeroDenominatorSeries,
    #[error("plane has rank {0}, expected 2")]
    RankDeficient(usize),
    #[error("plane needs at least 2 rows, got {0}")]
    TooFewRows(usize),
    #[error("all Plücker coordinates vanish")]
    ZeroPluckerVector,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vanishing patterns differ")]
    PatternMismatch,
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid pair ({0}, {1})")]
    InvalidPair(usize, usize),
    #[error("indices of a 4-tuple must be distinct")]
    RepeatedIndex,
    #[error("signature vanishes on every pair")]
    EverythingVanishes,
    #[error("signature is not admissible")]
    Inadmissible,
    #[error("invalid parallel structure: {0}")]
    InvalidStructure(String),
    #[error("n = {0} is outside the supported range {1}..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("input is not on the main stratum")]
    NotMainStratum,
    #[error("malformed z-coordinates: {0}")]
    MalformedZ(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("cross tuple is incomplete or has undefined entries")]
    IncompleteTuple,
    #[error("point is not a member of the virtual space")]
    NotAMember,
    #[error("containment not applicable: {0}")]
    NotApplicable(String),
    #[error("zero row at index {0}")]
    ZeroRow(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
