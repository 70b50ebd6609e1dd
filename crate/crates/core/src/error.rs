use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("malformed edge line {line}: {detail}")]
    MalformedEdge { line: usize, detail: String },

    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("truncated graph6 payload: expected {expected} bytes, found {found}")]
    TruncatedGraph6 { expected: usize, found: usize },

    #[error("invalid graph6 character {0:?}")]
    InvalidGraph6Char(char),

    #[error("colouring covers {found} vertices but the graph has {expected}")]
    ColouringDomainMismatch { expected: usize, found: usize },

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("colouring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperColouring(usize, usize),

    #[error("input is not a tree")]
    NotATree,

    #[error("{op} requires {requirement}")]
    Precondition { op: &'static str, requirement: String },

    #[error("scale refusal: {0}")]
    ScaleExceeded(String),

    #[error("colour count {k} out of range {lo}..={hi}")]
    KOutOfRange { k: usize, lo: usize, hi: usize },

    #[error("graph does not admit a J-colouring")]
    Inadmissible,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
