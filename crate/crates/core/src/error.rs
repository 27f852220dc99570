use thiserror::Error;

/// Errors raised by the interpolation library.
///
/// Decoding failures that are part of normal control flow (a μ-search
/// candidate that does not decode) are reported through
/// [`DecodeFailure`](crate::unipoly::DecodeFailure) instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("zero-denominator: rational function with zero denominator")]
    ZeroDenominator,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("zero-input: value must be nonzero")]
    ZeroInput,
    #[error("zero-numerator: numerator value must be nonzero")]
    ZeroNumerator,
    #[error("mu-search-exhausted: no scale up to {cap} decodes (check the T/D/C bounds)")]
    MuSearchExhausted { cap: u64 },
    #[error("chain-too-large: Kronecker exponent exceeds 2^62")]
    ChainTooLarge,
    #[error("exponent-too-large: exponent {0} exceeds 2^62")]
    ExponentTooLarge(u64),
    #[error("invalid-shifts: {0}")]
    InvalidShifts(String),
    #[error("invalid-bounds: {0}")]
    InvalidBounds(String),
    #[error("dimension-mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generation-failed: no coprime instance after {0} tries")]
    GenerationFailed(usize),
    #[error("oracle-scale: degree {0} exceeds the resultant oracle limit")]
    OracleScale(u64),
    #[error("validation-failed: recovered function disagrees with the black box at {0}")]
    ValidationFailed(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T, E = InterpError> = std::result::Result<T, E>;
