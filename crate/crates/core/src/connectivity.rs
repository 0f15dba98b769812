//! Exact edge and node connectivity, and fractional cut values.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{delta_mode, CutMode, EdgeSet, MultiGraph, NodeSet};
use crate::matching::flow::FlowNetwork;
use crate::rational::{is_unit_interval, to_common_denominator, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ConnKind {
    Edge,
    Node,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Minimum edge cut: the crossing edges (leaving `side` if directed).
    EdgeCut { side: NodeSet, edges: EdgeSet },
    /// Minimum node separator.
    Separator(Vec<usize>),
    /// Every ordered pair is adjacent; connectivity is `n - 1` by convention.
    Complete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnReport {
    pub kind: ConnKind,
    pub value: usize,
    pub witness: Witness,
}

fn need_two(g: &MultiGraph) -> Result<()> {
    if g.n() < 2 {
        Err(Error::TooFewNodes(2))
    } else {
        Ok(())
    }
}

fn unit_network(g: &MultiGraph) -> FlowNetwork {
    let mut net = FlowNetwork::new(g.n());
    for &(u, v) in g.edge_list() {
        if g.is_directed() {
            net.add_arc(u, v, 1);
        } else {
            net.add_edge(u, v, 1);
        }
    }
    net
}

/// Number of edge-disjoint `s`-`t` paths, capped at `limit`.
pub fn local_edge_connectivity(g: &MultiGraph, s: usize, t: usize, limit: Option<usize>) -> usize {
    let mut net = unit_network(g);
    net.max_flow(s, t, limit.map(|l| l as i128)) as usize
}

/// Global edge connectivity by max-flow sweeps from node 0 (in both
/// directions for digraphs).
pub fn edge_connectivity(g: &MultiGraph) -> Result<ConnReport> {
    need_two(g)?;
    let mut best: Option<(usize, NodeSet)> = None;
    let mut pairs = Vec::new();
    for t in 1..g.n() {
        pairs.push((0, t));
        if g.is_directed() {
            pairs.push((t, 0));
        }
    }
    for (s, t) in pairs {
        let mut net = unit_network(g);
        let limit = best.as_ref().map(|b| b.0 as i128);
        let value = net.max_flow(s, t, limit) as usize;
        if best.as_ref().is_none_or(|b| value < b.0) {
            let side = net.reachable(s);
            best = Some((value, NodeSet::from_nodes(g.n(), (0..g.n()).filter(|&v| side[v]))));
        }
    }
    let (value, side) = best.expect("n >= 2");
    let edges = delta_mode(g, &side, CutMode::Leaving)?;
    debug_assert_eq!(edges.len(), value);
    Ok(ConnReport {
        kind: ConnKind::Edge,
        value,
        witness: Witness::EdgeCut { side, edges },
    })
}

pub fn is_k_edge_connected(g: &MultiGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() < 2 {
        return false;
    }
    (1..g.n()).all(|t| {
        local_edge_connectivity(g, 0, t, Some(k)) >= k
            && (!g.is_directed() || local_edge_connectivity(g, t, 0, Some(k)) >= k)
    })
}

/// Vertex-split network: `v_in = 2v`, `v_out = 2v + 1`, unit node capacity,
/// parallel edges collapsed.
fn split_network(g: &MultiGraph, adj: &[Vec<bool>]) -> FlowNetwork {
    let n = g.n();
    let big = n as i128;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] && (g.is_directed() || u < v) {
                net.add_arc(2 * u + 1, 2 * v, big);
                if !g.is_directed() {
                    net.add_arc(2 * v + 1, 2 * u, big);
                }
            }
        }
    }
    net
}

/// Pairs whose local node connectivity must be examined: non-adjacent pairs
/// (ordered for digraphs).
fn separable_pairs(g: &MultiGraph, adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && !adj[s][t] && (g.is_directed() || s < t) {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

/// Internally disjoint `s`-`t` paths (s, t non-adjacent), capped at `limit`.
pub fn local_node_connectivity(g: &MultiGraph, s: usize, t: usize, limit: Option<usize>) -> usize {
    let adj = g.adjacency();
    let mut net = split_network(g, &adj);
    net.max_flow(2 * s + 1, 2 * t, limit.map(|l| l as i128)) as usize
}

/// Global node connectivity: the minimum local connectivity over all
/// non-adjacent pairs, `n - 1` when there are none.
pub fn node_connectivity(g: &MultiGraph) -> Result<ConnReport> {
    need_two(g)?;
    let adj = g.adjacency();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (s, t) in separable_pairs(g, &adj) {
        let mut net = split_network(g, &adj);
        let limit = best.as_ref().map(|b| b.0 as i128);
        let value = net.max_flow(2 * s + 1, 2 * t, limit) as usize;
        if best.as_ref().is_none_or(|b| value < b.0) {
            let seen = net.reachable(2 * s + 1);
            let sep = (0..g.n()).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect::<Vec<_>>();
            debug_assert_eq!(sep.len(), value);
            best = Some((value, sep));
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            break;
        }
    }
    Ok(match best {
        Some((value, sep)) => ConnReport {
            kind: ConnKind::Node,
            value,
            witness: Witness::Separator(sep),
        },
        None => ConnReport {
            kind: ConnKind::Node,
            value: g.n() - 1,
            witness: Witness::Complete,
        },
    })
}

/// Whether node connectivity is at least `k`; stops each pair at `k` paths.
pub fn is_k_connected(g: &MultiGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() < 2 || k > g.n() - 1 {
        return false;
    }
    let adj = g.adjacency();
    if g.is_directed() {
        // cheap necessary condition
        for v in 0..g.n() {
            let out = (0..g.n()).filter(|&w| adj[v][w]).count();
            let inn = (0..g.n()).filter(|&w| adj[w][v]).count();
            if out < k || inn < k {
                return false;
            }
        }
    } else if (0..g.n()).any(|v| adj[v].iter().filter(|&&b| b).count() < k) {
        return false;
    }
    let pairs = separable_pairs(g, &adj);
    let base = split_network(g, &adj);
    pairs.into_iter().all(|(s, t)| {
        let mut net = base.clone();
        net.max_flow(2 * s + 1, 2 * t, Some(k as i128)) >= k as i128
    })
}

/// `is_k_connected` on the spanning subgraph `(V, set)`.
pub fn is_k_connected_on(g: &MultiGraph, set: &EdgeSet, k: usize) -> bool {
    is_k_connected(&g.restrict(set).0, k)
}

/// Minimum fractional cut: `min x(delta(S))` over nonempty proper `S`
/// (leaving arcs for digraphs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalCut {
    pub value: Rational,
    pub side: NodeSet,
}

pub const ENUMERATION_MAX_NODES: usize = 20;

fn check_box(g: &MultiGraph, x: &[Rational]) -> Result<()> {
    if x.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: x.len(),
        });
    }
    if let Some(i) = x.iter().position(|v| !is_unit_interval(v)) {
        return Err(Error::BoxViolation { edge: i, value: x[i] });
    }
    Ok(())
}

/// Enumerates node subsets up to [`ENUMERATION_MAX_NODES`]; above that uses
/// Stoer–Wagner (undirected) or flow sweeps (directed), all exact.
pub fn fractional_edge_connectivity(g: &MultiGraph, x: &[Rational]) -> Result<FractionalCut> {
    check_box(g, x)?;
    need_two(g)?;
    if g.n() <= ENUMERATION_MAX_NODES {
        min_cut_by_enumeration(g, x)
    } else if g.is_directed() {
        min_cut_by_flows(g, x)
    } else {
        stoer_wagner(g, x)
    }
}

/// Reference implementation: every nonempty proper subset.
pub fn min_cut_by_enumeration(g: &MultiGraph, x: &[Rational]) -> Result<FractionalCut> {
    need_two(g)?;
    let n = g.n();
    if n > ENUMERATION_MAX_NODES {
        return Err(Error::TooLarge {
            what: "cut enumeration",
            size: n,
            cap: ENUMERATION_MAX_NODES,
        });
    }
    let (w, den) = to_common_denominator(x);
    let full = (1u64 << n) - 1;
    let edges: Vec<(u64, u64, i128)> = g
        .edge_list()
        .iter()
        .zip(&w)
        .map(|(&(u, v), &c)| (1u64 << u, 1u64 << v, c))
        .collect();
    let mut best: Option<(i128, u64)> = None;
    for mask in 1..full {
        // undirected cuts are symmetric: fix node 0 on the S side
        if !g.is_directed() && mask & 1 == 0 {
            continue;
        }
        let mut value = 0i128;
        for &(bu, bv, c) in &edges {
            let (iu, iv) = (mask & bu != 0, mask & bv != 0);
            let crosses = if g.is_directed() { iu && !iv } else { iu != iv };
            if crosses {
                value += c;
            }
        }
        if best.is_none_or(|b| value < b.0) {
            best = Some((value, mask));
        }
    }
    let (value, mask) = best.expect("n >= 2");
    Ok(FractionalCut {
        value: Rational::new(value, den),
        side: NodeSet::Mask(mask),
    })
}

/// Stoer–Wagner on integer-scaled weights.
pub fn stoer_wagner(g: &MultiGraph, x: &[Rational]) -> Result<FractionalCut> {
    g.require_undirected()?;
    need_two(g)?;
    let n = g.n();
    let (w, den) = to_common_denominator(x);
    let mut weight = vec![vec![0i128; n]; n];
    for (&(u, v), &c) in g.edge_list().iter().zip(&w) {
        weight[u][v] += c;
        weight[v][u] += c;
    }
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(i128, Vec<usize>)> = None;
    while active.len() > 1 {
        let mut attach = vec![0i128; n];
        let mut added = vec![false; n];
        let mut order = Vec::with_capacity(active.len());
        for _ in 0..active.len() {
            let next = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| attach[a].cmp(&attach[b]).then(b.cmp(&a)))
                .expect("nonempty");
            added[next] = true;
            order.push(next);
            for &v in &active {
                if !added[v] {
                    attach[v] += weight[next][v];
                }
            }
        }
        let last = order[order.len() - 1];
        let prev = order[order.len() - 2];
        if best.as_ref().is_none_or(|b| attach[last] < b.0) {
            best = Some((attach[last], members[last].clone()));
        }
        // merge `last` into `prev`
        let (keep, gone) = (prev, last);
        let moved = std::mem::take(&mut members[gone]);
        members[keep].extend(moved);
        for &v in &active {
            weight[keep][v] += weight[gone][v];
            weight[v][keep] = weight[keep][v];
        }
        weight[keep][keep] = 0;
        active.retain(|&v| v != gone);
    }
    let (value, side) = best.expect("n >= 2");
    Ok(FractionalCut {
        value: if value.is_zero() { Rational::zero() } else { Rational::new(value, den) },
        side: NodeSet::from_nodes(n, side),
    })
}

fn min_cut_by_flows(g: &MultiGraph, x: &[Rational]) -> Result<FractionalCut> {
    let (w, den) = to_common_denominator(x);
    let mut best: Option<(i128, NodeSet)> = None;
    for t in 1..g.n() {
        for (s, t) in [(0, t), (t, 0)] {
            let mut net = FlowNetwork::new(g.n());
            for (&(u, v), &c) in g.edge_list().iter().zip(&w) {
                if g.is_directed() {
                    net.add_arc(u, v, c);
                } else {
                    net.add_edge(u, v, c);
                }
            }
            let value = net.max_flow(s, t, None);
            if best.as_ref().is_none_or(|b| value < b.0) {
                let seen = net.reachable(s);
                best = Some((value, NodeSet::from_nodes(g.n(), (0..g.n()).filter(|&v| seen[v]))));
            }
        }
    }
    let (value, side) = best.expect("n >= 2");
    Ok(FractionalCut {
        value: Rational::new(value, den),
        side,
    })
}
