use std::fmt;

use thiserror::Error;

use crate::weight::SymmetryClass;

/// Position-tagged syntax error from the relation language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not invariant under the Σ₃ action ({0})")]
    NotInvariant(String),

    #[error("mixed symmetry classes: {0:?} and {1:?}")]
    MixedSymmetry(SymmetryClass, SymmetryClass),

    #[error("unsupported symmetry class {0:?} for {1}")]
    UnsupportedSymmetry(SymmetryClass, &'static str),

    #[error("symmetric class requires explicit presentation")]
    MissingPresentation,

    #[error("presentation does not generate the relation module: {0}")]
    BadPresentation(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unknown example algebra `{0}`")]
    UnknownExample(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("product is not {kind}: e{left}·e{right} violates it")]
    NotSymmetricProduct {
        kind: &'static str,
        left: usize,
        right: usize,
    },

    #[error("invalid algebra instance: {0}")]
    InvalidInstance(String),

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
