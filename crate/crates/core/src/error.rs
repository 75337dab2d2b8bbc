use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("vector is not a root: squared length {0}, expected 2")]
    NotARoot(String),

    #[error("partition has {parts} parts but only {vars} variables are available")]
    TooManyParts { parts: usize, vars: usize },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(u32),

    #[error("index {index} out of range for degree {degree}")]
    UnsupportedIndex { degree: u32, index: usize },

    #[error("orbit of size {size} exceeds the enumeration guard {limit}")]
    OrbitTooLarge { size: u64, limit: u64 },

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("reference coefficient vanishes for basis index {0}")]
    VanishingReference(usize),

    #[error("weight {weight} is not a dominant weight of the representation {highest}")]
    NotBelow { weight: String, highest: String },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
