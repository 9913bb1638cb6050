use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different space models ({0} vs {1})")]
    MixedModel(&'static str, &'static str),

    #[error("word {0} is not admissible for the adjacency matrix")]
    Inadmissible(String),

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("invalid refinement level: {0}")]
    InvalidLevel(String),

    #[error("invalid adjacency matrix: {0}")]
    InvalidMatrix(String),

    #[error("group elements do not belong to the same group ({0})")]
    GroupMismatch(String),

    #[error("invalid group element: {0}")]
    InvalidElement(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("the set is empty")]
    EmptySet,

    #[error("search exhausted at bound {bound} without finding a witness")]
    SearchExhausted { bound: usize },

    #[error("intermediate cell count {count} exceeds the limit {limit}")]
    CellLimit { count: usize, limit: usize },

    #[error("unsupported for this model: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MixedModel(..) => "MIXED_MODEL",
            Error::Inadmissible(_) => "INADMISSIBLE",
            Error::InvalidCell(_) => "INVALID_CELL",
            Error::InvalidLevel(_) => "INVALID_LEVEL",
            Error::InvalidMatrix(_) => "INVALID_MATRIX",
            Error::GroupMismatch(_) => "GROUP_MISMATCH",
            Error::InvalidElement(_) => "INVALID_ELEMENT",
            Error::Precondition(_) => "PRECONDITION_VIOLATION",
            Error::HypothesisFailed(_) => "HYPOTHESIS_FAILED",
            Error::EmptySet => "EMPTY_SET",
            Error::SearchExhausted { .. } => "SEARCH_EXHAUSTED",
            Error::CellLimit { .. } => "CELL_LIMIT",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::Parse(_) => "PARSE",
            Error::Internal(_) => "INTERNAL",
        }
    }
}
