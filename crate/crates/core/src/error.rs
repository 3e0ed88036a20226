use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational literal `{0}`")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is degenerate")]
    Degenerate(&'static str),
    #[error("subspace is not contained in the ambient space")]
    NotContained,
    #[error("no Lagrangian complement: {0}")]
    NoLagrangianComplement(&'static str),
    #[error("form kind mismatch: {0}")]
    FormKind(String),
    #[error("precondition failed: {identity}{}", witness_suffix(.witness))]
    Precondition {
        identity: String,
        witness: Option<Vec<usize>>,
    },
    #[error("unsatisfied model constraints: {}", .0.join("; "))]
    Constraints(Vec<String>),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Input(String),
}

fn witness_suffix(w: &Option<Vec<usize>>) -> String {
    match w {
        Some(idx) => format!(" (witness basis indices {idx:?})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(r: &crate::report::Report) -> Self {
        Error::Precondition {
            identity: r.identity.clone(),
            witness: r.witness.clone(),
        }
    }
}
