use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Family parameters outside the accepted range.
    #[error("invalid {family} parameters: {constraint}")]
    Validation { family: &'static str, constraint: String },
    #[error("graph order {requested} exceeds capacity {capacity}")]
    Capacity { requested: usize, capacity: usize },
    #[error("graph is disconnected; distance matrix undefined")]
    Disconnected,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    Index { vertex: usize, order: usize },
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("unsupported family for this operation: {0}")]
    Unsupported(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn validation(family: &'static str, constraint: impl Into<String>) -> Self {
        Error::Validation {
            family,
            constraint: constraint.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
