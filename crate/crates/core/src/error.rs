use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("index arithmetic overflowed")]
    Overflow,

    #[error("closed form evaluated to a negative value")]
    NegativeValue,

    #[error("operation needs at least one operand")]
    NoOperands,

    #[error("operand graph has no vertices")]
    EmptyOperand,

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("thorn count must be at least 1")]
    ZeroThorns,

    #[error("copy count must be at least 1")]
    ZeroCopies,

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn params(family: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}
