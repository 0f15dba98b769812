//! Deterministic instance generators.
//!
//! All randomness comes from `ChaCha8Rng` (crate `rand_chacha` 0.3) seeded
//! with `seed_from_u64(seed)`; draws use `rand` 0.8 `gen_range`. The same
//! arguments always produce the same instance.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{edge_connectivity, is_k_connected, node_connectivity};
use crate::cover::CostVector;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::rational::{int, Rational};

/// Denominator of every generated cost.
pub const COST_GRID: i128 = 1024;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Harary graph H(k, n): k-connected with the minimum `ceil(kn/2)` edges.
///
/// Circulant on jumps `1..=k/2`; for odd `k` add the diameters (`n` even) or
/// the edges `i -- i + (n+1)/2` for `i = 0..=(n-1)/2` (`n` odd).
pub fn harary(k: usize, n: usize) -> Result<MultiGraph> {
    if k < 2 || k >= n {
        return Err(Error::Parameter(format!("harary needs 2 <= k < n, got k = {k}, n = {n}")));
    }
    let g = MultiGraph::undirected(n, harary_edges(k, n))?;
    debug_assert_eq!(g.m(), (k * n).div_ceil(2));
    let kappa = node_connectivity(&g)?.value;
    assert_eq!(kappa, k, "harary({k}, {n}) has connectivity {kappa}");
    Ok(g)
}

fn harary_edges(k: usize, n: usize) -> Vec<(usize, usize)> {
    let r = k / 2;
    let mut edges = Vec::new();
    for j in 1..=r {
        for i in 0..n {
            edges.push((i, (i + j) % n));
        }
    }
    if k % 2 == 1 {
        edges.extend(odd_extra(n));
    }
    edges
}

fn odd_extra(n: usize) -> Vec<(usize, usize)> {
    if n % 2 == 0 {
        (0..n / 2).map(|i| (i, i + n / 2)).collect()
    } else {
        (0..=(n - 1) / 2).map(|i| (i, (i + n.div_ceil(2)) % n)).collect()
    }
}

/// k-regular k-edge-connected multigraph for `n <= k`: the cycle repeated
/// `k/2` times, plus the odd-degree completion when `k` is odd.
fn regular_multigraph(k: usize, n: usize) -> Result<MultiGraph> {
    let mut edges = Vec::new();
    for _ in 0..k / 2 {
        edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    }
    if k % 2 == 1 {
        edges.extend(odd_extra(n));
    }
    MultiGraph::undirected(n, edges)
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

/// A k-edge-connected multigraph: Harary base (a k-regular multigraph when
/// `n <= k`, a path when `k = 1`) plus `extra` random non-loop edges, parallel
/// edges allowed.
pub fn random_k_edge_connected(n: usize, k: usize, extra: usize, seed: u64) -> Result<MultiGraph> {
    if k < 1 || n < 2 {
        return Err(Error::Parameter(format!("need k >= 1 and n >= 2, got k = {k}, n = {n}")));
    }
    let base = if k == 1 {
        MultiGraph::path(n)
    } else if n > k {
        harary(k, n)?
    } else {
        regular_multigraph(k, n)?
    };
    let mut rng = rng(seed);
    let mut edges = base.edge_list().to_vec();
    edges.extend((0..extra).map(|_| random_pair(&mut rng, n)));
    let g = MultiGraph::undirected(n, edges)?;
    let lambda = edge_connectivity(&g)?.value;
    assert!(lambda >= k, "generated graph has edge connectivity {lambda} < {k}");
    Ok(g)
}

/// A simple k-connected graph: Harary base plus up to `extra` random
/// non-edges (fewer when the graph fills up).
pub fn random_simple_k_connected(n: usize, k: usize, extra: usize, seed: u64) -> Result<MultiGraph> {
    let base = harary(k, n)?;
    let mut adj = base.adjacency();
    let mut edges = base.edge_list().to_vec();
    let mut rng = rng(seed);
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !adj[u][v])
        .collect();
    for _ in 0..extra {
        if missing.is_empty() {
            break;
        }
        let (u, v) = missing.swap_remove(rng.gen_range(0..missing.len()));
        adj[u][v] = true;
        edges.push((u, v));
    }
    let g = MultiGraph::undirected(n, edges)?;
    assert!(is_k_connected(&g, k));
    Ok(g)
}

/// A simple k-connected digraph: arcs `i -> i + j` for `j = 1..=k`, plus up to
/// `extra` random missing arcs.
pub fn random_k_connected_digraph(n: usize, k: usize, extra: usize, seed: u64) -> Result<MultiGraph> {
    if k < 1 || k >= n {
        return Err(Error::Parameter(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    let mut arcs: Vec<(usize, usize)> = (1..=k).flat_map(|j| (0..n).map(move |i| (i, (i + j) % n))).collect();
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &arcs {
        present[u][v] = true;
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !present[u][v])
        .collect();
    let mut rng = rng(seed);
    for _ in 0..extra {
        if missing.is_empty() {
            break;
        }
        arcs.push(missing.swap_remove(rng.gen_range(0..missing.len())));
    }
    let g = MultiGraph::directed(n, arcs)?;
    assert!(is_k_connected(&g, k));
    Ok(g)
}

/// Costs `t / 1024` with `t` uniform in `1..=4 * 1024`.
pub fn random_costs(m: usize, seed: u64) -> CostVector {
    let mut rng = rng(seed);
    let costs = (0..m)
        .map(|_| Rational::new(rng.gen_range(1..=4 * COST_GRID), COST_GRID))
        .collect();
    CostVector::new(costs).expect("positive costs")
}

/// Complete graph with costs satisfying `c(uv) <= beta (c(ua) + c(av))`.
#[derive(Clone, Debug)]
pub struct BetaMetricInstance {
    pub graph: MultiGraph,
    pub costs: CostVector,
    pub beta: Rational,
}

impl BetaMetricInstance {
    /// Checks every ordered triple of distinct nodes.
    pub fn satisfies_beta_triangle(&self) -> bool {
        let n = self.graph.n();
        let mut c = vec![vec![Rational::default(); n]; n];
        for (e, &(u, v)) in self.graph.edge_list().iter().enumerate() {
            c[u][v] = self.costs.as_slice()[e];
            c[v][u] = c[u][v];
        }
        (0..n).all(|u| {
            (0..n).all(|a| {
                (0..n).all(|v| u == a || a == v || u == v || c[u][v] <= self.beta * (c[u][a] + c[a][v]))
            })
        })
    }
}

/// Costs drawn on the 1/1024 grid from `[1, 2 beta]`; any two such costs sum
/// to at least 2, which gives the beta-triangle inequality.
pub fn beta_metric_instance(n: usize, beta: Rational, seed: u64) -> Result<BetaMetricInstance> {
    if beta < Rational::new(1, 2) || beta >= Rational::one() {
        return Err(Error::Parameter(format!("beta must lie in [1/2, 1), got {beta}")));
    }
    if n < 3 {
        return Err(Error::Parameter(format!("beta-metric instances need n >= 3, got {n}")));
    }
    let graph = MultiGraph::complete(n);
    let hi = (beta * int(2 * COST_GRID)).floor().to_integer();
    let mut rng = rng(seed);
    let costs = (0..graph.m())
        .map(|_| Rational::new(rng.gen_range(COST_GRID..=hi), COST_GRID))
        .collect();
    let inst = BetaMetricInstance {
        graph,
        costs: CostVector::new(costs)?,
        beta,
    };
    assert!(inst.satisfies_beta_triangle());
    Ok(inst)
}
