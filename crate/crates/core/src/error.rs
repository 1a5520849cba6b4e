use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a graph6 record could not be decoded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("byte {byte} at offset {offset} is outside the printable range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("bit string truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the adjacency data")]
    TrailingData { extra: usize },
    #[error("graphs with {0} vertices are not supported")]
    TooManyVertices(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("expected a header line \"n m\"")]
    MissingHeader,
    #[error("expected two non-negative integers")]
    Malformed,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("header announced {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list parse error on line {line}: {kind}")]
    EdgeList { line: usize, kind: EdgeListError },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("permutation has length {found}, graph has {expected} vertices")]
    PermutationLength { expected: usize, found: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("automorphism search exceeded its budget of {budget} nodes")]
    NodeBudgetExceeded { budget: u64 },
    #[error("brute force is limited to {limit} vertices, graph has {n}")]
    TooLargeForBruteForce { n: usize, limit: usize },
    #[error("product would have {vertices} vertices, limit is {limit}")]
    ProductTooLarge { vertices: usize, limit: usize },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("{0} requires a connected graph")]
    Disconnected(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status for this error: 2 unreadable input, 3 search
    /// budget, 4 size limit, 5 unknown name, 6 disconnected graph, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Graph6(_) | Error::EdgeList { .. } | Error::InvalidGraph(_) => 2,
            Error::NodeBudgetExceeded { .. } | Error::TooLargeForBruteForce { .. } => 3,
            Error::ProductTooLarge { .. } | Error::InvalidSize(_) => 4,
            Error::UnknownProperty(_) | Error::UnknownTheorem(_) => 5,
            Error::Disconnected(_) => 6,
            _ => 1,
        }
    }

    pub(crate) fn edge_list(line: usize, kind: EdgeListError) -> Self {
        Error::EdgeList { line, kind }
    }
}
