use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("{what} needs n <= {cap}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("n = {n} is outside the regime n > 5k^2 for k = {k}")]
    OutOfRegime { n: usize, k: usize },

    #[error(
        "cannot certify the ordering: float intervals overlap and exact mode is capped ({detail})"
    )]
    UndecidableAtCap { detail: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("graph has no dominating vertex")]
    NoDominatingVertex,

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("stream line {line}: {source}")]
    StreamParse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable machine-readable tag, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameters(_) => "invalid-parameters",
            Error::OverlappingSets => "overlapping-sets",
            Error::MalformedGraph6 { .. } => "malformed-graph6",
            Error::TooLarge { .. } => "too-large",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::OutOfRegime { .. } => "out-of-regime",
            Error::UndecidableAtCap { .. } => "undecidable-at-cap",
            Error::PreconditionViolated(_) => "precondition-violated",
            Error::NoDominatingVertex => "no-dominating-vertex",
            Error::InvalidMove(_) => "invalid-move",
            Error::StreamParse { .. } => "stream-parse",
        }
    }
}

pub(crate) fn ensure_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::TooLarge { what, n, cap })
    } else {
        Ok(())
    }
}
