use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by the zero {0}")]
    DivisionByZero(&'static str),

    #[error("matrix is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },

    #[error("vector is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
