use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("invalid atom name `{0}` (expected [a-z][a-z0-9_]*)")]
    InvalidAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("{count} atoms exceed the world enumeration limit of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("labeling covers {found} arguments but the framework has {expected}")]
    IncompatibleLabeling { expected: usize, found: usize },
    #[error("invalid edit: {0}")]
    InvalidEdit(String),
    #[error("frameworks are defined over different argument sets")]
    ArgumentSetMismatch,
    #[error("not a {semantics}-stratified labeling: {reason}")]
    NotStratified { semantics: String, reason: String },
    #[error("enumeration budget of {budget} exceeded")]
    Truncated { budget: usize },
    #[error("knowledge base is inconsistent: no conditional in {{{}}} is tolerated", .remaining.join(", "))]
    Inconsistent { remaining: Vec<String> },
    #[error("duplicate conditional {0}")]
    DuplicateConditional(String),
    #[error("ranking function has no world of rank 0")]
    NoPlausibleWorld,
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: more than one `|` separator at the top level of a conditional")]
    AmbiguousBar { line: usize, column: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
