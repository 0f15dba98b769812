use crate::rational::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("edge {edge} is a self-loop at node {node}")]
    SelfLoop { edge: usize, node: usize },

    #[error("operation requires a {expected} graph")]
    Orientation { expected: &'static str },

    #[error("source and sink coincide (node {0})")]
    SourceIsSink(usize),

    #[error("graph is not bipartite (odd cycle through node {0})")]
    NotBipartite(usize),

    #[error("infeasible: node {node} has degree {degree} but demand {demand}")]
    Infeasible { node: usize, degree: usize, demand: usize },

    #[error("instance too large for {what}: {size} exceeds cap {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("graph is not {k}-edge-connected (edge connectivity {found})")]
    NotKEdgeConnected { k: usize, found: usize },

    #[error("graph is not {k}-connected (node connectivity {found})")]
    NotKConnected { k: usize, found: usize },

    #[error("x[{edge}] = {value} lies outside [0, 1]")]
    BoxViolation { edge: usize, value: Rational },

    #[error("x is not in the fractional {k}-edge-connectivity polytope: cut value {value}")]
    NotInConnectivityPolytope { k: usize, value: Rational, side: Vec<usize> },

    #[error("negative cost {value} on edge {edge}")]
    NegativeCost { edge: usize, value: Rational },

    #[error("vector has {found} entries, graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },

    #[error("graph needs at least {0} nodes")]
    TooFewNodes(usize),

    #[error("budget {budget} is below any connected spanning subgraph ({needed} edges)")]
    BudgetTooSmall { budget: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
