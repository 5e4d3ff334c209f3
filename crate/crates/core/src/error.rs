use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The scan reached its horizon without bracketing a sign change.
    #[error("no root in (0, {cap}]")]
    NoRootInRange { cap: f64 },

    /// No shooting geodesic entered the matching ball around the target.
    #[error("target not reached by any grid geodesic within t <= {horizon}")]
    NotReached { horizon: f64 },

    /// The best partner candidate stays farther than the matching radius.
    #[error("no Maxwell partner: best mismatch {mismatch:e}")]
    NoPartner { mismatch: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
