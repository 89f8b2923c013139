use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("quaternary part has odd length {0}")]
    OddQuaternaryLength(usize),

    #[error("coordinate {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid symbol {symbol} at position {position}")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty code")]
    EmptyCode,

    #[error("enumeration cap exceeded: {needed} > {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("permutation {0} is not an automorphism of the code")]
    NotAutomorphism(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch { expected: expected.to_string(), found: found.to_string() }
    }
}
