use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} qubits, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("cannot reduce the identity string to Z on the first qubit")]
    IdentityReduction,

    #[error("malformed encoder: {0}")]
    MalformedEncoder(String),

    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("rewrite did not converge after {0} steps")]
    NonTermination(usize),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
