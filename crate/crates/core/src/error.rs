use thiserror::Error;

/// Errors raised by the library. Every variant has a stable kebab-case code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("{0} needs a graph with at least one edge")]
    EmptyGraph(&'static str),
    #[error("{0} needs a graph with at least one vertex")]
    NullGraph(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed poset: {0}")]
    MalformedPoset(String),
    #[error("malformed lattice: {0}")]
    MalformedLattice(String),
    #[error("inconsistent labels: {0}")]
    Inconsistent(String),
    #[error("cannot strengthen labelling from {from} to {to}")]
    CannotStrengthen { from: &'static str, to: &'static str },
    #[error("the lattice is a chain shared by a star and a matching")]
    AmbiguousStarMatching,
    #[error("no anchor subgraph found in the abstract lattice")]
    UnrecognizedAnchor,
    #[error("the abstract lattice is shared by graphs with different induced subgraph posets")]
    AmbiguousLattice,
    #[error("input is not the chromatic symmetric function or deck of a tree")]
    NotATree,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("graph6 parse error at offset {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TooManyVertices(_) => "too-many-vertices",
            Error::InvalidEdge(..) => "invalid-edge",
            Error::EmptyGraph(_) => "empty-graph",
            Error::NullGraph(_) => "null-graph",
            Error::Precondition(_) => "precondition",
            Error::MalformedPoset(_) => "malformed-poset",
            Error::MalformedLattice(_) => "malformed-lattice",
            Error::Inconsistent(_) => "inconsistent-labels",
            Error::CannotStrengthen { .. } => "cannot-strengthen",
            Error::AmbiguousStarMatching => "ambiguous-star-matching",
            Error::UnrecognizedAnchor => "unrecognized-anchor",
            Error::AmbiguousLattice => "ambiguous-lattice",
            Error::NotATree => "not-a-tree",
            Error::Overflow(_) => "overflow",
            Error::Graph6 { .. } => "graph6-parse",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
