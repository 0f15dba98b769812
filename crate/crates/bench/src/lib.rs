//! Instances shared by the benchmarks.

use kcover::cover::CostVector;
use kcover::generate::{harary, random_costs, random_simple_k_connected};
use kcover::MultiGraph;

/// A k-connected simple graph on `n` nodes with some slack above the minimum
/// edge count, and random costs for it.
pub fn weighted_instance(n: usize, k: usize, seed: u64) -> (MultiGraph, CostVector) {
    let g = random_simple_k_connected(n, k, n, seed).expect("valid parameters");
    let c = random_costs(g.m(), seed);
    (g, c)
}

pub fn tight_instance(n: usize, k: usize) -> MultiGraph {
    harary(k, n).expect("valid parameters")
}
