//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenience alias for results carrying [`Error`].
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label occurs twice in a vertex list.
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    /// An edge names a vertex that is not in the vertex list.
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownEndpoint(String),
    /// An edge joins a vertex to itself.
    #[error("self-loop at {0}")]
    SelfLoop(String),
    /// Subdivision arity outside `{2, 3, 4}`.
    #[error("edges can only be subdivided 2, 3 or 4 times, got {0}")]
    BadSubdivisionArity(usize),
    /// A requested label is not present.
    #[error("unknown vertex label {0}")]
    UnknownLabel(String),
    /// The operation needs a graph whose vertices are all original vertices.
    #[error("expected a graph on original vertices only, found {0}")]
    NotOriginalGraph(String),
    /// A weight map has no entry for a vertex.
    #[error("no weight given for vertex {0}")]
    MissingWeight(String),
    /// The exact oracle was asked to solve an instance above its size limit.
    #[error("oracle limit exceeded: {n} vertices, limit {limit}")]
    OracleSizeExceeded { n: usize, limit: usize },
    /// An edge does not cross the given bipartition.
    #[error("partition is not a bipartition of the graph: {0}")]
    NotBipartitePartition(String),
    /// A side of a co-bipartite partition is not a clique, or the sides overlap.
    #[error("partition sides are not disjoint cliques: {0}")]
    NotCoBipartite(String),
    /// The representation kind does not suit the algorithm.
    #[error("wrong representation kind: {0}")]
    WrongKind(String),
    /// A construction needs at least one edge.
    #[error("the input graph has no edges")]
    EmptyEdgeSet,
    /// A representation and a graph disagree on their vertex labels.
    #[error("label sets differ: {only_in_rep} only in the representation, {only_in_graph} only in the graph")]
    LabelSetMismatch {
        only_in_rep: usize,
        only_in_graph: usize,
    },
    /// A representation violates the invariants of its kind.
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    /// A circumference below the minimum that keeps a layout valid.
    #[error("circumference {given} is below the minimum {minimum}")]
    CircumferenceTooSmall { given: i64, minimum: i64 },
    /// A parameter outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The constraint system for a circular layout has no solution.
    #[error("no circular layout satisfies the constraints: {0}")]
    LayoutInfeasible(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
