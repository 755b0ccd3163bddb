use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: self-loop on vertex `{vertex}`")]
    SelfLoop { line: usize, vertex: String },

    #[error("line {line}: duplicate directed edge {src} -> {dst}")]
    DuplicateEdge {
        line: usize,
        src: String,
        dst: String,
    },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A mathematical invariant did not hold; always a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Input errors are the caller's fault; everything else is ours.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}
