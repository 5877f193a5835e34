use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("subdivision-edge corona needs at least one edge in the first graph")]
    EdgeRequired,
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("polynomial has a non-real root ({re} + {im}i)")]
    ComplexRoots { re: f64, im: f64 },
    #[error("graph must be regular: {0}")]
    RegRequired(String),
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("exhaustive search limited to {max} vertices, got {requested}")]
    TooLarge { requested: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name, printed by the CLI on failure.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "INVALID_PARAMS",
            Error::InvalidGraph(_) => "INVALID_GRAPH",
            Error::EdgeRequired => "EDGE_REQUIRED",
            Error::NonSquare { .. } => "NON_SQUARE",
            Error::NotMonic => "NOT_MONIC",
            Error::NotSymmetric(_) => "NOT_SYMMETRIC",
            Error::ComplexRoots { .. } => "COMPLEX_ROOTS",
            Error::RegRequired(_) => "REG_REQUIRED",
            Error::InexactDivision(_) => "INEXACT_DIVISION",
            Error::Disconnected => "DISCONNECTED",
            Error::HypothesisNotMet(_) => "HYPOTHESIS_NOT_MET",
            Error::TooLarge { .. } => "TOO_LARGE",
            Error::Parse(_) => "PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
