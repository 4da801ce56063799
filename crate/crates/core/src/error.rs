use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: argument `{name}` declared twice")]
    DuplicateArgument { line: usize, name: String },
    #[error("line {line}: undeclared argument `{name}`")]
    UndeclaredArgument { line: usize, name: String },
    #[error("missing `#` separator between nodes and edges")]
    MissingSeparator,
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("framework has {arguments} arguments, above the exhaustive-search limit of {limit}")]
    LimitExceeded { arguments: usize, limit: usize },
    #[error("maximum in-degree {in_degree} exceeds the bounded-search limit k = {k}")]
    InDegreeTooLarge { in_degree: usize, k: usize },
    #[error("family is not closed under {operation}: {left:?} and {right:?}")]
    NotClosed {
        operation: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    #[error("family does not contain the empty set")]
    MissingEmptySet,
    #[error("framework is not admissible-closed: {left:?} and {right:?} are admissible, their intersection is not")]
    NotAdmissibleClosed { left: Vec<usize>, right: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
}
