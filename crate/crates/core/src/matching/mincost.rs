use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::matching::bmatching::DegreeBound;
use crate::rational::{to_common_denominator, Rational};

/// Two-colouring of an undirected graph; `Err(NotBipartite(v))` names a node
/// on an odd cycle.
pub fn bipartition(g: &MultiGraph) -> Result<Vec<bool>> {
    g.require_undirected()?;
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("coloured");
            for &e in g.incident(u) {
                let (a, b) = g.edge_list()[e];
                let w = if a == u { b } else { a };
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Err(Error::NotBipartite(w)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap_or(true)).collect())
}

struct CostNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i128>,
}

impl CostNetwork {
    fn new(n: usize) -> Self {
        CostNetwork {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: i64, cost: i128) -> usize {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.cost.push(cost);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
        id
    }

    /// Successive shortest paths (Bellman–Ford, arc costs may be negative),
    /// stopping as soon as the cheapest augmenting path is no longer negative.
    fn min_cost_any_flow(&mut self, s: usize, t: usize) {
        let n = self.adj.len();
        loop {
            let mut dist = vec![i128::MAX; n];
            let mut via = vec![usize::MAX; n];
            let mut in_queue = vec![false; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                in_queue[u] = false;
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && dist[u] + self.cost[a] < dist[v] {
                        dist[v] = dist[u] + self.cost[a];
                        via[v] = a;
                        if !in_queue[v] {
                            in_queue[v] = true;
                            queue.push_back(v);
                        }
                    }
                }
            }
            if dist[t] == i128::MAX || dist[t] >= 0 {
                return;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let a = via[v];
                push = push.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.to[a ^ 1];
            }
        }
    }
}

/// Minimum-cost edge set with degree at least `b(v)` at every node of a
/// bipartite graph.
///
/// The complement of a cover is a `(deg - b)`-matching, so the cheapest cover
/// is `E` minus a maximum-weight `(deg - b)`-matching, found as a min-cost flow
/// with negated weights.
pub fn min_cost_bipartite_b_edge_cover(
    g: &MultiGraph,
    cost: &[Rational],
    b: &DegreeBound,
) -> Result<EdgeSet> {
    let left = bipartition(g)?;
    if cost.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: cost.len(),
        });
    }
    if b.0.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: b.0.len(),
        });
    }
    for v in 0..g.n() {
        if g.degree(v) < b.get(v) {
            return Err(Error::Infeasible {
                node: v,
                degree: g.degree(v),
                demand: b.get(v),
            });
        }
    }
    let (weights, _) = to_common_denominator(cost);
    if let Some(i) = weights.iter().position(|&w| w < 0) {
        return Err(Error::NegativeCost {
            edge: i,
            value: cost[i],
        });
    }
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut net = CostNetwork::new(n + 2);
    for v in 0..n {
        let slack = (g.degree(v) - b.get(v)) as i64;
        if left[v] {
            net.add_arc(s, v, slack, 0);
        } else {
            net.add_arc(v, t, slack, 0);
        }
    }
    let arcs: Vec<usize> = g
        .edge_list()
        .iter()
        .zip(&weights)
        .map(|(&(u, v), &w)| {
            let (l, r) = if left[u] { (u, v) } else { (v, u) };
            net.add_arc(l, r, 1, -w)
        })
        .collect();
    net.min_cost_any_flow(s, t);
    // edges carrying flow are dropped from the cover
    let ids = arcs.iter().enumerate().filter(|(_, &a)| net.cap[a] == 1).map(|(i, _)| i);
    Ok(EdgeSet::from_ids(g.m(), ids))
}
