use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}, expected '1', '2' or '3'")]
    InvalidLetter(char),

    #[error("invalid directive {0:?}")]
    InvalidDirective(String),

    #[error("directive has {available} substitutions, {needed} needed")]
    DirectiveExhausted { needed: usize, available: usize },

    #[error("unstabilized: only {stable} of {budget} letters are determined at depth {depth}")]
    Unstabilized { budget: usize, stable: usize, depth: usize },

    #[error("invalid edge ({letter}, {delta}): delta must lie in -2..=2")]
    InvalidEdge { letter: u8, delta: i64 },

    #[error("strip failed at step {step}: word does not start with {letter}")]
    StripFailed { step: usize, letter: u8 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("target {target} is too large for an explicit path")]
    TargetTooLarge { target: String },

    #[error(
        "stage {stage}: conjugated target has sup-norm {sup_norm}, its path needs about \
         {estimated_edges} edges (limit {limit})"
    )]
    BudgetExceeded { stage: usize, sup_norm: String, estimated_edges: String, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Output(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Output(err.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Output(err.to_string())
    }
}
