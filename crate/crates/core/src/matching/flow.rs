use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, NodeId, NodeSet};
use crate::rational::{to_common_denominator, Rational};

/// Residual network with integer capacities, solved by Dinic's algorithm.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i128>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds arc `u -> v`; returns its index (the reverse arc is `index ^ 1`).
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i128) -> usize {
        self.add_pair(u, v, cap, 0)
    }

    /// Adds an undirected edge as a pair of arcs sharing residual capacity.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i128) -> usize {
        self.add_pair(u, v, cap, cap)
    }

    fn add_pair(&mut self, u: usize, v: usize, fwd: i128, bwd: i128) -> usize {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(fwd);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(bwd);
        id
    }

    pub fn residual(&self, arc: usize) -> i128 {
        self.cap[arc]
    }

    /// Pushes flow from `s` to `t` until none remains or `limit` is reached.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: Option<i128>) -> i128 {
        let mut total = 0i128;
        let n = self.adj.len();
        let mut level = vec![usize::MAX; n];
        let mut iter = vec![0usize; n];
        loop {
            if limit.is_some_and(|l| total >= l) {
                break;
            }
            level.iter_mut().for_each(|l| *l = usize::MAX);
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && level[v] == usize::MAX {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] == usize::MAX {
                break;
            }
            iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let want = limit.map_or(i128::MAX, |l| l - total);
                if want <= 0 {
                    break;
                }
                let pushed = self.augment(s, t, want, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn augment(&mut self, u: usize, t: usize, want: i128, level: &[usize], iter: &mut [usize]) -> i128 {
        if u == t {
            return want;
        }
        while iter[u] < self.adj[u].len() {
            let a = self.adj[u][iter[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u].wrapping_add(1) {
                let got = self.augment(v, t, want.min(self.cap[a]), level, iter);
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            iter[u] += 1;
        }
        0
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Maximum `s`-`t` flow value together with the source side of a minimum cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowResult {
    pub value: Rational,
    pub source_side: NodeSet,
}

/// Exact maximum flow with rational capacities (one per edge; undirected
/// edges carry capacity in both directions).
pub fn max_flow(g: &MultiGraph, cap: &[Rational], s: NodeId, t: NodeId) -> Result<FlowResult> {
    g.check_node(s.0)?;
    g.check_node(t.0)?;
    if s == t {
        return Err(Error::SourceIsSink(s.0));
    }
    if cap.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: cap.len(),
        });
    }
    if let Some(i) = cap.iter().position(|c| c.is_negative()) {
        return Err(Error::Parameter(format!("negative capacity on edge {i}")));
    }
    let (ints, den) = to_common_denominator(cap);
    let mut net = FlowNetwork::new(g.n());
    let mut cut_capacity = Vec::with_capacity(g.m());
    for (&(u, v), &c) in g.edge_list().iter().zip(&ints) {
        if g.is_directed() {
            net.add_arc(u, v, c);
        } else {
            net.add_edge(u, v, c);
        }
        cut_capacity.push((u, v, c));
    }
    let value = net.max_flow(s.0, t.0, None);
    let side = net.reachable(s.0);
    let crossing: i128 = cut_capacity
        .iter()
        .filter(|&&(u, v, _)| {
            if g.is_directed() {
                side[u] && !side[v]
            } else {
                side[u] != side[v]
            }
        })
        .map(|&(_, _, c)| c)
        .sum();
    assert_eq!(crossing, value, "max-flow/min-cut mismatch");
    let value = Rational::new(value, den);
    debug_assert!(!value.is_negative() || value.is_zero());
    Ok(FlowResult {
        value,
        source_side: NodeSet::from_nodes(g.n(), (0..g.n()).filter(|&v| side[v])),
    })
}
