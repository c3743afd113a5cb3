use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("no connected set of at most 7 vertices reaches every vertex within distance 3")]
    NoSeed,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("cycle length {0} is outside 3..=64")]
    BadK(usize),
    #[error("vertex {vertex}: color {color} is outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Some list became empty: the instance has no coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("list of vertex {vertex} became empty")]
pub struct Infeasible {
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("vertex {vertex} has a list of size {size}; at most 2 is supported")]
    ListTooLarge { vertex: usize, size: usize },
    #[error("vertex {vertex} has an empty list")]
    EmptyList { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("more than {cap} colorings")]
pub struct CapExceeded {
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input is outside the P9-free guarantee: {0}")]
    NotP9Free(String),
    #[error("cycle length {0} is not supported by the structured solvers")]
    Unsupported(usize),
    #[error("{0}")]
    Input(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("consecutive walk vertices {index} and {} are not adjacent", index + 1)]
pub struct NotAWalk {
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("malformed source: {0}")]
    Malformed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
