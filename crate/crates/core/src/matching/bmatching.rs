//! Maximum cardinality b-matching.
//!
//! General graphs go through the vertex-copy gadget and the blossom solver;
//! bipartite graphs through a flow network.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::matching::blossom::max_matching_adj;
use crate::matching::flow::FlowNetwork;

/// Per-node degree bound `b(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound(pub Vec<usize>);

impl DegreeBound {
    pub fn uniform(n: usize, b: usize) -> Self {
        DegreeBound(vec![b; n])
    }

    /// `b(v) = deg(v) - l`, the bound whose b-matchings are complements of
    /// l-edge-covers. Nodes of degree below `l` get 0.
    pub fn cover_complement(degrees: &[usize], l: usize) -> Self {
        DegreeBound(degrees.iter().map(|&d| d.saturating_sub(l)).collect())
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: n,
                found: self.0.len(),
            })
        }
    }
}

/// The vertex-copy gadget of `g` under `b`.
///
/// Node layout: for every edge `i = uv`, nodes `2i` (= e_u) and `2i + 1`
/// (= e_v), followed by `min(b(v), deg(v))` copies of every node `v`.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub adj: Vec<Vec<usize>>,
    m: usize,
}

impl Gadget {
    pub fn build(g: &MultiGraph, b: &DegreeBound) -> Gadget {
        let m = g.m();
        let mut first_copy = Vec::with_capacity(g.n());
        let mut next = 2 * m;
        for v in 0..g.n() {
            first_copy.push(next);
            next += b.get(v).min(g.degree(v));
        }
        let mut adj = vec![Vec::new(); next];
        let join = |a: usize, c: usize, adj: &mut Vec<Vec<usize>>| {
            adj[a].push(c);
            adj[c].push(a);
        };
        for (i, &(u, v)) in g.edge_list().iter().enumerate() {
            let (eu, ev) = (2 * i, 2 * i + 1);
            join(eu, ev, &mut adj);
            for (side, w) in [(eu, u), (ev, v)] {
                let copies = b.get(w).min(g.degree(w));
                for c in first_copy[w]..first_copy[w] + copies {
                    join(side, c, &mut adj);
                }
            }
        }
        Gadget { adj, m }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Solves the gadget and decodes the b-matching. Returns the b-matching
    /// and the size of the maximum matching found on the gadget.
    pub fn solve(&self) -> (Vec<usize>, usize) {
        let res = max_matching_adj(&self.adj);
        let mut mate: Vec<Option<usize>> = res.mate;
        let mut chosen = Vec::new();
        for i in 0..self.m {
            let (eu, ev) = (2 * i, 2 * i + 1);
            let to_copy = |x: Option<usize>| x.is_some_and(|w| w >= 2 * self.m);
            match (to_copy(mate[eu]), to_copy(mate[ev])) {
                (true, true) => chosen.push(i),
                (true, false) | (false, true) => {
                    // rewire the single copy-side match to e_u - e_v
                    for side in [eu, ev] {
                        if let Some(c) = mate[side].filter(|&w| w >= 2 * self.m) {
                            mate[c] = None;
                        }
                    }
                    mate[eu] = Some(ev);
                    mate[ev] = Some(eu);
                }
                (false, false) => {}
            }
        }
        (chosen, res.size)
    }
}

/// Maximum b-matching of an undirected multigraph via the gadget reduction.
pub fn max_b_matching(g: &MultiGraph, b: &DegreeBound) -> Result<EdgeSet> {
    g.require_undirected()?;
    b.check(g.n())?;
    let (chosen, _) = Gadget::build(g, b).solve();
    Ok(EdgeSet::from_ids(g.m(), chosen))
}

/// Maximum b-matching of a bipartite graph given by its side labelling
/// (`left[v]` true for one side), computed as a maximum flow.
pub fn max_bipartite_b_matching(g: &MultiGraph, b: &DegreeBound, left: &[bool]) -> Result<EdgeSet> {
    g.require_undirected()?;
    b.check(g.n())?;
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        let cap = b.get(v).min(g.degree(v)) as i128;
        if left[v] {
            net.add_arc(s, v, cap);
        } else {
            net.add_arc(v, t, cap);
        }
    }
    let mut arcs = Vec::with_capacity(g.m());
    for &(u, v) in g.edge_list() {
        let (l, r) = if left[u] { (u, v) } else { (v, u) };
        if left[r] || !left[l] {
            return Err(Error::NotBipartite(u));
        }
        arcs.push(net.add_arc(l, r, 1));
    }
    net.max_flow(s, t, None);
    let ids = arcs.iter().enumerate().filter(|(_, &a)| net.residual(a) == 0).map(|(i, _)| i);
    Ok(EdgeSet::from_ids(g.m(), ids))
}
