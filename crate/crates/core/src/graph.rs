//! Multigraphs, edge sets, node subsets and incidence queries.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

/// Position of an edge in its graph's edge list. Stable for the lifetime of
/// the graph; parallel edges are told apart only by their id.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl From<usize> for NodeId {
    fn from(v: usize) -> Self {
        NodeId(v)
    }
}

impl From<usize> for EdgeId {
    fn from(v: usize) -> Self {
        EdgeId(v)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Directed or undirected graph with parallel edges and without loops.
///
/// Undirected edges are stored with `tail <= head`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new<I>(n: usize, directed: bool, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        let mut incident = vec![Vec::new(); n];
        for (id, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::NodeOutOfRange { node: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id, node: u });
            }
            let e = if directed || u < v { (u, v) } else { (v, u) };
            incident[u].push(id);
            incident[v].push(id);
            list.push(e);
        }
        Ok(MultiGraph {
            n,
            directed,
            edges: list,
            incident,
        })
    }

    pub fn undirected<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        Self::new(n, false, edges)
    }

    pub fn directed<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        Self::new(n, true, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, false, edges).expect("complete graph is valid")
    }

    /// All `n(n-1)` arcs, ordered by tail then head.
    pub fn complete_digraph(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Self::new(n, true, arcs).expect("complete digraph is valid")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, false, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 3")
    }

    pub fn directed_cycle(n: usize) -> Self {
        Self::new(n, true, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 2")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, false, (1..n).map(|i| (i - 1, i))).expect("path is valid")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, false, outer.chain(spokes).chain(inner)).expect("petersen is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        let (u, v) = self.edges[e.0];
        (NodeId(u), NodeId(v))
    }

    /// Raw `(tail, head)` pairs in edge-id order.
    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Ids of edges incident to `v` (both orientations for digraphs).
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.incident[v].iter().filter(|&&e| self.edges[e].0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.incident[v].iter().filter(|&&e| self.edges[e].1 == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degrees counted only over edges of `set`; for digraphs `(out, in)`.
    pub fn degrees_in(&self, set: &EdgeSet) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); self.n];
        for e in set.iter() {
            let (u, v) = self.edges[e.0];
            deg[u].0 += 1;
            deg[v].1 += 1;
        }
        if !self.directed {
            for d in &mut deg {
                *d = (d.0 + d.1, d.0 + d.1);
            }
        }
        deg
    }

    /// The graph `(V, set)`. Edge `i` of the result is the `i`-th member of
    /// `set` in increasing id order; the returned vector maps it back.
    pub fn restrict(&self, set: &EdgeSet) -> (MultiGraph, Vec<EdgeId>) {
        let ids: Vec<EdgeId> = set.iter().collect();
        let g = MultiGraph::new(self.n, self.directed, ids.iter().map(|e| self.edges[e.0]))
            .expect("subgraph of a valid graph is valid");
        (g, ids)
    }

    /// Copy with parallel edges merged, keeping the first occurrence.
    pub fn simplified(&self) -> MultiGraph {
        let mut seen = std::collections::HashSet::new();
        let edges: Vec<_> = self.edges.iter().copied().filter(|e| seen.insert(*e)).collect();
        MultiGraph::new(self.n, self.directed, edges).expect("valid")
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.simplified().m() != self.m()
    }

    /// Adjacency matrix with parallel edges collapsed.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            if !self.directed {
                adj[v][u] = true;
            }
        }
        adj
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, n: self.n })
        }
    }

    pub fn require_directed(&self) -> Result<()> {
        if self.directed {
            Ok(())
        } else {
            Err(Error::Orientation { expected: "directed" })
        }
    }

    pub fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::Orientation { expected: "undirected" })
        } else {
            Ok(())
        }
    }

    pub fn with_orientation(&self, directed: bool) -> MultiGraph {
        MultiGraph::new(self.n, directed, self.edges.iter().copied()).expect("valid")
    }
}

/// Subset of the edge ids of one graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: Vec<bool>,
}

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet { bits: vec![false; m] }
    }

    pub fn full(m: usize) -> Self {
        EdgeSet { bits: vec![true; m] }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(m: usize, ids: I) -> Self {
        let mut s = Self::empty(m);
        for i in ids {
            s.bits[i] = true;
        }
        s
    }

    /// Bit `i` of `mask` selects edge `i`; `m <= 64`.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        EdgeSet {
            bits: (0..m).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.get(e.0).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.bits[e.0] = true;
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.bits[e.0] = false;
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| EdgeId(i))
    }

    pub fn ids(&self) -> Vec<usize> {
        self.iter().map(|e| e.0).collect()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect(),
        }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect(),
        }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && !*b).collect(),
        }
    }

    pub fn complement(&self) -> EdgeSet {
        EdgeSet {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

/// Node subset: a bitmask while `n <= 64`, a sorted list above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NodeSet {
    Mask(u64),
    List(Vec<usize>),
}

impl NodeSet {
    pub fn from_nodes<I: IntoIterator<Item = usize>>(n: usize, nodes: I) -> NodeSet {
        if n <= 64 {
            NodeSet::Mask(nodes.into_iter().fold(0u64, |m, v| m | 1u64 << v))
        } else {
            let mut list: Vec<usize> = nodes.into_iter().collect();
            list.sort_unstable();
            list.dedup();
            NodeSet::List(list)
        }
    }

    pub fn all(n: usize) -> NodeSet {
        Self::from_nodes(n, 0..n)
    }

    pub fn contains(&self, v: usize) -> bool {
        match self {
            NodeSet::Mask(m) => v < 64 && m >> v & 1 == 1,
            NodeSet::List(l) => l.binary_search(&v).is_ok(),
        }
    }

    pub fn nodes(&self) -> Vec<usize> {
        match self {
            NodeSet::Mask(m) => (0..64).filter(|&v| m >> v & 1 == 1).collect(),
            NodeSet::List(l) => l.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            NodeSet::Mask(m) => m.count_ones() as usize,
            NodeSet::List(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            NodeSet::Mask(m) => {
                let bad = if n >= 64 { 0 } else { m >> n };
                if bad != 0 {
                    let node = n + bad.trailing_zeros() as usize;
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            NodeSet::List(l) => {
                if let Some(&node) = l.iter().find(|&&v| v >= n) {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
        }
        Ok(())
    }
}

/// Which crossing edges of a directed cut to report.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CutMode {
    All,
    Leaving,
    Entering,
}

/// Edges with exactly one endpoint in `s`.
pub fn delta(g: &MultiGraph, s: &NodeSet) -> Result<EdgeSet> {
    delta_mode(g, s, CutMode::All)
}

/// [`delta`] restricted to arcs leaving or entering `s`. For undirected
/// graphs every mode returns all crossing edges.
pub fn delta_mode(g: &MultiGraph, s: &NodeSet, mode: CutMode) -> Result<EdgeSet> {
    s.validate(g.n())?;
    let mode = if g.is_directed() { mode } else { CutMode::All };
    let ids = g.edges.iter().enumerate().filter_map(|(i, &(u, v))| {
        let (iu, iv) = (s.contains(u), s.contains(v));
        let keep = match mode {
            CutMode::All => iu != iv,
            CutMode::Leaving => iu && !iv,
            CutMode::Entering => !iu && iv,
        };
        keep.then_some(i)
    });
    Ok(EdgeSet::from_ids(g.m(), ids))
}

/// Edges with at least one endpoint in `s`.
pub fn zeta(g: &MultiGraph, s: &NodeSet) -> Result<EdgeSet> {
    s.validate(g.n())?;
    let ids = g
        .edges
        .iter()
        .enumerate()
        .filter_map(|(i, &(u, v))| (s.contains(u) || s.contains(v)).then_some(i));
    Ok(EdgeSet::from_ids(g.m(), ids))
}

/// Bipartite double of a digraph: node `v` keeps index `v`, its copy `v'` is
/// `n + v`, and arc `i = uv` becomes undirected edge `i = u v'`.
#[derive(Clone, Debug)]
pub struct BipartiteDouble {
    pub graph: MultiGraph,
    pub n: usize,
}

impl BipartiteDouble {
    pub fn copy_of(&self, v: usize) -> usize {
        self.n + v
    }

    /// Edge ids coincide with arc ids, so sets transfer unchanged.
    pub fn edge_of_arc(&self, arc: EdgeId) -> EdgeId {
        arc
    }
}

pub fn bipartite_double(g: &MultiGraph) -> Result<BipartiteDouble> {
    g.require_directed()?;
    let n = g.n();
    let graph = MultiGraph::undirected(2 * n, g.edges.iter().map(|&(u, v)| (u, n + v)))?;
    Ok(BipartiteDouble { graph, n })
}
