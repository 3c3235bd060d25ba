use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a degree tuple needs at least two entries, got {0}")]
    TooFewDegrees(usize),
    #[error("degree entries must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("degree entry {0} is too large")]
    DegreeTooLarge(i64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("bit positions are only defined for positive integers")]
    ZeroBitPositions,
    #[error("socle degree {0} is even")]
    EvenSocleDegree(u32),
    #[error("socle degree {0} is odd")]
    OddSocleDegree(u32),
    #[error("top degree {top} exceeds the ceiling of half the socle degree {socle}")]
    TopDegreeTooLarge { top: u32, socle: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("triple ({0}, {1}, {2}) violates the strict triangle inequality")]
    NotStable(u64, u64, u64),
    #[error("polynomials over different coefficient fields")]
    FieldMismatch,
    #[error("length mismatch: {0} generators against {1} coefficients")]
    LengthMismatch(usize, usize),
    #[error("matrix dimension {0} exceeds the brute-force guard {1}")]
    DimensionGuard(usize, usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
