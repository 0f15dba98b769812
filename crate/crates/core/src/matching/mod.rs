//! Exact flow and matching substrate for the cover solvers.

pub mod blossom;
pub mod bmatching;
pub mod flow;
pub mod mincost;

pub use blossom::{max_matching, max_matching_certified, TutteBergeWitness};
pub use bmatching::{max_b_matching, max_bipartite_b_matching, DegreeBound, Gadget};
pub use flow::{max_flow, FlowNetwork, FlowResult};
pub use mincost::{bipartition, min_cost_bipartite_b_edge_cover};
