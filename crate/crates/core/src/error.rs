use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("unknown wavelet '{name}'; available: {available}")]
    UnknownWavelet { name: String, available: String },

    #[error("overlap-add normalization vanishes at sample {index} (window/hop pair is not invertible)")]
    NotInvertible { index: usize },

    #[error("signal too short: {0}")]
    TooShort(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("unsupported audio format in {path}: {reason}")]
    UnsupportedFormat { path: PathBuf, reason: String },

    #[error("wav error in {path}: {cause}")]
    Wav {
        path: PathBuf,
        cause: hound::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
