use thiserror::Error;

/// Errors from the symbolic algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("flavor mismatch: cannot combine auxiliary and final vectors")]
    FlavorMismatch,
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
}

/// A parse failure with a 1-based character column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(column: usize, message: impl Into<String>) -> Self {
        Self { column, message: message.into() }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("operator B at position {position} is not supported by the cone/cylinder recursion; use the linear extension")]
    UnsupportedOperator { position: usize },
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("vertex set {0:?} is not a face of the lattice")]
    NotAFace(Vec<usize>),
    #[error("invalid lattice: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinearError {
    /// The residual is rendered entry by entry, indexed by dimension-set mask.
    #[error("flag vector is not in the span of the basis (residual {residual:?})")]
    NotInSpan { residual: Vec<String> },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: i32, found: i32 },
    #[error("dimension {0} is outside the supported range 0..=8")]
    UnsupportedDimension(i32),
}

/// Umbrella error for callers that mix several layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linear(#[from] LinearError),
}
