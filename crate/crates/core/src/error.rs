use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field size {0} exceeds the supported limit of 65536")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("elements belong to different profiles")]
    ProfileMismatch,
    #[error("element space of size {size} exceeds the enumeration cutoff {cutoff}")]
    TooLargeToEnumerate { size: String, cutoff: u64 },
    #[error("radius {r} out of range 0..={max}")]
    RadiusOutOfRange { r: usize, max: usize },
    #[error("minimum distance {d} out of range 1..={max}")]
    DistanceOutOfRange { d: usize, max: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("malformed anticode spec: {0}")]
    MalformedSpec(String),
    #[error(
        "optimal binary Hamming anticodes are not classified by coordinate supports; use brute force"
    )]
    BinaryHammingUnsupported,
    #[error("the zero element has no initial entry")]
    ZeroElement,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
