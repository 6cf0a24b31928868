use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 2, got {0}")]
    BadExtensionDegree(u32),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("invalid rank sequence {ranks:?} for dimension {n}")]
    InvalidRankSequence { ranks: Vec<usize>, n: usize },
    #[error("removable cell index {index} out of range ({count} cells)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("interpolated coefficients are not integers")]
    NonIntegerCoefficients,
    #[error("need at least {needed} interpolation points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("prime {0} divides the leading coefficient")]
    BadPrime(u64),
    #[error("characteristic must exceed 3, got {0}")]
    BadCharacteristic(u32),
    #[error("enumeration of {size} items exceeds the budget of {budget}")]
    TooLarge { size: u128, budget: u64 },
    #[error("division by {divisor} is not exact in {context}")]
    InexactDivision { divisor: i64, context: String },
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("rank prediction mismatch at (a,b,c,d,e,f) = {params:?}: predicted {predicted:?}, actual {actual:?}")]
    PredictionMismatch {
        params: [u32; 6],
        predicted: Vec<usize>,
        actual: Vec<usize>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
