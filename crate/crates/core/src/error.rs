use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be between 1 and 3, got {0}")]
    BadAlphabetSize(usize),
    #[error("symbol {symbol} is outside an alphabet of size {size}")]
    SymbolOutOfRange { symbol: u8, size: usize },
    #[error("operation requires a binary alphabet")]
    NonBinaryAlphabet,
    #[error("morphism is erasing")]
    Erasing,
    #[error("morphism is not uniform")]
    NotUniform,
    #[error("morphism is not synchronizing")]
    NotSynchronizing,
    #[error("exponent domain violated: need 1 < alpha < beta < 2 and n >= 1")]
    BadExponentDomain,
    #[error("query of length {len} exceeds the oracle cap {max_len}")]
    QueryTooLong { len: usize, max_len: usize },
    #[error("avoidance language not finite within cap {cap}: {witness:?} survives")]
    AvoidanceNotFinite { cap: usize, witness: String },
    #[error("factor must contain both letters 0 and 1")]
    NotBiLiteral,
    #[error("factor must contain both squares 00 and 11")]
    MissingAnchorSquares,
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
