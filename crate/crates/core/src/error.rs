use thiserror::Error;

use crate::formula::Formula;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why an explicitly given incision was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IncisionViolation {
    /// The incision contains a sentence that occurs in no kernel.
    OutsideKernels { formula: String },
    /// A non-empty kernel is left untouched by the incision.
    UnhitKernel { kernel: Vec<String> },
}

impl std::fmt::Display for IncisionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IncisionViolation::OutsideKernels { formula } => {
                write!(f, "`{formula}` is not a member of any kernel")
            }
            IncisionViolation::UnhitKernel { kernel } => {
                write!(f, "kernel {{{}}} is not hit", kernel.join(", "))
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown atom `{name}`{}", .column.map(|c| format!(" at column {c}")).unwrap_or_default())]
    UnknownAtom { name: String, column: Option<usize> },

    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("{what} exceeds the configured limit ({actual} > {limit})")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("not a Horn formula: offending subformula `{}`", .0)]
    NotHorn(Formula),

    #[error("invalid selection: {0}")]
    InvalidSelection(String),

    #[error("invalid incision: {0}")]
    InvalidIncision(IncisionViolation),

    #[error("invalid infra choice: {0}")]
    InvalidInfraChoice(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown postulate `{0}`")]
    UnknownPostulate(String),

    #[error("postulate {postulate} does not apply to {subject} subjects")]
    InapplicablePostulate {
        postulate: &'static str,
        subject: &'static str,
    },

    #[error("{path}:{line}: {message}")]
    Input {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn limit(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::LimitExceeded {
            what,
            limit,
            actual,
        }
    }

    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::LimitExceeded { .. } => 2,
            _ => 1,
        }
    }
}
