use thiserror::Error;

/// Errors raised by graph construction, generators and drawing algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("digraph contains a directed cycle")]
    NotAcyclic,
    #[error("numbering input contains a cycle")]
    CycleDetected,
    #[error("expected exactly one source and one sink: {0}")]
    MultipleSourcesOrSinks(String),
    #[error("source and sink must both lie on the outer face")]
    StNotOnOuterFace,
    #[error("inconsistent embedding: {0}")]
    EmbeddingInconsistent(String),
    #[error("numbering violates edge {edge} ({from} -> {to})")]
    InvalidNumbering { edge: usize, from: usize, to: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("constraint path {0} is not a directed path")]
    InvalidPath(usize),
    #[error("constraint paths {0} and {1} intersect")]
    PathsIntersect(usize, usize),
    #[error("graph is not an outer 1-plane graph: {0}")]
    NotOuter1Plane(String),
    #[error("diagonal labeling property violated on quadrangle {0:?}")]
    LabelingPropertyViolated([usize; 4]),
    #[error("no split pair at vertex {0}")]
    NoValidSplitPair(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
