use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("edge {0}-{1} joins two pendant vertices; its AZI weight is undefined")]
    DegenerateEdge(usize, usize),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("minimum non-pendant degree is undefined (no vertex of degree >= 2)")]
    UndefinedMinNonPendantDegree,
    #[error("graph has cyclomatic number {found}, expected {expected}")]
    WrongCyclomatic { expected: i64, found: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
