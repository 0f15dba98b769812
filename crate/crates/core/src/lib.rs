//! Small l-edge-covers in k-edge-connected graphs.
//!
//! Exact cover solvers built on matching and flow, the cover-then-augment
//! approximation for minimum k-connected spanning subgraphs, the budgeted
//! maximum-connectivity variant, and an exact-rational checker for membership
//! of scaled connectivity points in the integral cover polytope.

pub mod connectivity;
pub mod cover;
pub mod error;
pub mod generate;
pub mod graph;
pub mod kcs;
pub mod matching;
pub mod oracle;
pub mod polytope;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{bipartite_double, delta, delta_mode, zeta, CutMode, EdgeId, EdgeSet, MultiGraph, NodeId, NodeSet};
pub use rational::Rational;
