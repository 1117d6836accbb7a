use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Which enumeration limit a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CapKind {
    /// Bound on `n` for loops over all vertex subsets.
    Vertex,
    /// Bound on `m` (or `|A|`) for loops over all edge subsets.
    Edge,
    /// Bound on `m` for the edge alternating-sum check.
    EdgeSum,
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::Vertex => "vertex-cap",
            CapKind::Edge => "edge-cap",
            CapKind::EdgeSum => "edge-sum-cap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error("{kind} exceeded: size {actual} > limit {limit}")]
    CapExceeded {
        kind: CapKind,
        limit: usize,
        actual: usize,
    },
    #[error("expansion is only defined for graphs with at least one vertex")]
    EmptyGraph,
    #[error("edge subset has no odd cycle")]
    NotOddCyclic,
}

impl AlgoError {
    pub(crate) fn check_cap(kind: CapKind, limit: usize, actual: usize) -> Result<(), AlgoError> {
        if actual > limit.min(64) {
            Err(AlgoError::CapExceeded {
                kind,
                limit: limit.min(64),
                actual,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot reverse a degree {degree} polynomial to degree {target}")]
    DegreeTooSmall { degree: usize, target: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("bad family spec: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
