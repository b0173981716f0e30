use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("invalid basis symbol: {0}")]
    InvalidKey(String),
    #[error("element is not weight-homogeneous")]
    NotHomogeneous,
    #[error("element is not parity-homogeneous")]
    NotParityHomogeneous,
    #[error("mode {mode} out of range for weight {weight}")]
    ModeOutOfRange { mode: String, weight: String },
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(String, String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("element is not in family {family}: {element}")]
    NotInFamily { family: String, element: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
