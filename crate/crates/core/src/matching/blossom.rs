//! Edmonds' blossom algorithm for maximum cardinality matching.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{EdgeSet, MultiGraph};

const NONE: usize = usize::MAX;

/// Tutte–Berge certificate: with `barrier` = A and `odd_components` the number
/// of odd components of G - A, every matching has at most
/// `(n + |A| - odd_components) / 2` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteBergeWitness {
    pub barrier: Vec<usize>,
    pub odd_components: usize,
}

impl TutteBergeWitness {
    pub fn bound(&self, n: usize) -> usize {
        (n + self.barrier.len() - self.odd_components) / 2
    }
}

#[derive(Clone, Debug)]
pub struct MatchingResult {
    /// `mate[v]` is the partner of `v`, if matched.
    pub mate: Vec<Option<usize>>,
    pub size: usize,
    pub witness: TutteBergeWitness,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns an exposed endpoint of
    /// an augmenting path, or `None`. Afterwards `used` marks the even
    /// (outer) vertices of the tree.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching on adjacency lists (node `v` adjacent to `adj[v]`).
pub fn max_matching_adj(adj: &[Vec<usize>]) -> MatchingResult {
    let n = adj.len();
    let mut s = Search::new(adj);
    // greedy start
    for v in 0..n {
        if s.mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| s.mate[w] == NONE && w != v) {
                s.mate[v] = w;
                s.mate[w] = v;
            }
        }
    }
    for v in 0..n {
        if s.mate[v] == NONE {
            if let Some(end) = s.find_path(v) {
                s.augment(end);
            }
        }
    }
    // Even vertices over all exposed roots form the Gallai–Edmonds set D.
    let mut even = vec![false; n];
    for v in 0..n {
        if s.mate[v] == NONE {
            let found = s.find_path(v);
            assert!(found.is_none(), "augmenting path after termination");
            for (e, u) in even.iter_mut().zip(&s.used) {
                *e |= *u;
            }
        }
    }
    let witness = tutte_berge(adj, &even);
    let size = s.mate.iter().filter(|&&m| m != NONE).count() / 2;
    assert_eq!(witness.bound(n), size, "Tutte–Berge witness does not certify the matching");
    MatchingResult {
        mate: s.mate.iter().map(|&m| (m != NONE).then_some(m)).collect(),
        size,
        witness,
    }
}

fn tutte_berge(adj: &[Vec<usize>], even: &[bool]) -> TutteBergeWitness {
    let n = adj.len();
    let mut in_barrier = vec![false; n];
    for v in 0..n {
        if even[v] {
            for &w in &adj[v] {
                if !even[w] {
                    in_barrier[w] = true;
                }
            }
        }
    }
    let mut comp_seen = in_barrier.clone();
    let mut odd_components = 0;
    for s in 0..n {
        if comp_seen[s] {
            continue;
        }
        comp_seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in &adj[u] {
                if !comp_seen[w] {
                    comp_seen[w] = true;
                    stack.push(w);
                }
            }
        }
        odd_components += size % 2;
    }
    TutteBergeWitness {
        barrier: (0..n).filter(|&v| in_barrier[v]).collect(),
        odd_components,
    }
}

/// Maximum cardinality matching of an undirected multigraph. Among parallel
/// edges the one with the smallest id is reported.
pub fn max_matching(g: &MultiGraph) -> Result<EdgeSet> {
    Ok(max_matching_certified(g)?.0)
}

pub fn max_matching_certified(g: &MultiGraph) -> Result<(EdgeSet, TutteBergeWitness)> {
    g.require_undirected()?;
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edge_list() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let res = max_matching_adj(&adj);
    let mut set = EdgeSet::empty(g.m());
    for (i, &(u, v)) in g.edge_list().iter().enumerate() {
        if res.mate[u] == Some(v) && !g.incident(u).iter().any(|&e| set.contains(e.into())) {
            set.insert(i.into());
        }
    }
    debug_assert_eq!(set.len(), res.size);
    Ok((set, res.witness))
}
