use ratinterp_core::InterpError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("bad input: {0}")]
    Input(String),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 0 success, 2 scale search exhausted, 3 bad input or usage, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 3,
            CliError::Interp(e) => match e {
                InterpError::MuSearchExhausted { .. } => 2,
                InterpError::Parse(_)
                | InterpError::InvalidBounds(_)
                | InterpError::InvalidShifts(_)
                | InterpError::DimensionMismatch { .. }
                | InterpError::ZeroDenominator
                | InterpError::ExponentTooLarge(_)
                | InterpError::ChainTooLarge => 3,
                _ => 1,
            },
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
