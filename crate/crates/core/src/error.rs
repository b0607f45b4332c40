use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("element {element} does not belong to ring {ring}")]
    ElementMismatch { element: String, ring: String },

    #[error("ideals or graphs live over different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("ideal {0} is the whole ring")]
    ImproperIdeal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
