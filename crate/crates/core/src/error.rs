use thiserror::Error;

/// Errors raised by the simulator, the Boolean-function toolkit and the
/// memory layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("resource limit: {what} needs {requested} qubits, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape mismatch: expected {expected} qubits, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("degenerate state: norm is zero")]
    Degenerate,

    #[error("no solution: the function has an empty truth set")]
    NoSolution,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("non-finite amplitude at index {0}")]
    NonFinite(usize),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
