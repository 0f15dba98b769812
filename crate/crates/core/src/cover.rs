//! Exact l-edge-cover solvers and the cover-cost bound for k-edge-connected
//! graphs.
//!
//! An edge set `I` is an l-edge-cover if `(V, I)` has minimum degree at least
//! `l`; for digraphs both the minimum out-degree and in-degree must reach `l`.
//!
//! * Minimum size: the complement of a maximum b-matching with
//!   `b(v) = deg(v) - l` (gadget + blossom for undirected graphs, flow on the
//!   bipartite double for digraphs).
//! * Minimum cost: min-cost flow on the bipartite double for digraphs, and a
//!   branch-and-bound over edge decisions for undirected graphs.

use num_traits::{One, Signed, Zero};

use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{bipartite_double, EdgeSet, MultiGraph};
use crate::matching::{max_b_matching, max_bipartite_b_matching, min_cost_bipartite_b_edge_cover, DegreeBound};
use crate::rational::{sum, to_common_denominator, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    l: usize,
    directed: bool,
}

impl CoverSpec {
    pub fn new(l: usize, directed: bool) -> Result<Self> {
        if l == 0 {
            return Err(Error::Parameter("cover demand l must be at least 1".into()));
        }
        Ok(CoverSpec { l, directed })
    }

    /// Spec matching the orientation of `g`.
    pub fn for_graph(g: &MultiGraph, l: usize) -> Result<Self> {
        Self::new(l, g.is_directed())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    fn check(&self, g: &MultiGraph) -> Result<()> {
        match (self.directed, g.is_directed()) {
            (true, false) => Err(Error::Orientation { expected: "directed" }),
            (false, true) => Err(Error::Orientation { expected: "undirected" }),
            _ => Ok(()),
        }
    }
}

/// Nonnegative exact cost per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostVector(Vec<Rational>);

impl CostVector {
    pub fn new(costs: Vec<Rational>) -> Result<Self> {
        if let Some(i) = costs.iter().position(|c| c.is_negative()) {
            return Err(Error::NegativeCost { edge: i, value: costs[i] });
        }
        Ok(CostVector(costs))
    }

    pub fn unit(m: usize) -> Self {
        CostVector(vec![Rational::one(); m])
    }

    pub fn for_graph(g: &MultiGraph, costs: Vec<Rational>) -> Result<Self> {
        if costs.len() != g.m() {
            return Err(Error::LengthMismatch {
                expected: g.m(),
                found: costs.len(),
            });
        }
        Self::new(costs)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        sum(&self.0)
    }

    pub fn cost_of(&self, set: &EdgeSet) -> Rational {
        sum(set.iter().map(|e| &self.0[e.0]))
    }

    /// All edges cost the same.
    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.0.len() == g.m() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.m(),
                found: self.0.len(),
            })
        }
    }
}

/// Whether `(V, set)` has minimum degree (out- and in-degree for digraphs) at
/// least `spec.l()`. The orientation of `g` decides the semantics.
pub fn is_edge_cover(g: &MultiGraph, set: &EdgeSet, spec: CoverSpec) -> bool {
    let l = spec.l();
    g.degrees_in(set).iter().all(|&(a, b)| a >= l && b >= l)
}

fn check_feasible(g: &MultiGraph, l: usize) -> Result<()> {
    for v in 0..g.n() {
        let (degree, short) = if g.is_directed() {
            let (o, i) = (g.out_degree(v), g.in_degree(v));
            (o.min(i), o.min(i) < l)
        } else {
            (g.degree(v), g.degree(v) < l)
        };
        if short {
            return Err(Error::Infeasible { node: v, degree, demand: l });
        }
    }
    Ok(())
}

/// Minimum-cardinality l-edge-cover.
pub fn min_size_edge_cover(g: &MultiGraph, spec: CoverSpec) -> Result<EdgeSet> {
    spec.check(g)?;
    check_feasible(g, spec.l())?;
    let matching = if g.is_directed() {
        let double = bipartite_double(g)?;
        let b = DegreeBound::cover_complement(&double.graph.degrees(), spec.l());
        let left: Vec<bool> = (0..double.graph.n()).map(|v| v < g.n()).collect();
        max_bipartite_b_matching(&double.graph, &b, &left)?
    } else {
        let b = DegreeBound::cover_complement(&g.degrees(), spec.l());
        max_b_matching(g, &b)?
    };
    let cover = matching.complement();
    debug_assert!(is_edge_cover(g, &cover, spec));
    Ok(cover)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CoverOptions {
    /// Largest edge count accepted by the undirected weighted branch-and-bound.
    pub max_bnb_edges: usize,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions { max_bnb_edges: 24 }
    }
}

/// Minimum-cost l-edge-cover with the default options.
pub fn min_cost_edge_cover(g: &MultiGraph, c: &CostVector, spec: CoverSpec) -> Result<EdgeSet> {
    min_cost_edge_cover_with(g, c, spec, CoverOptions::default())
}

pub fn min_cost_edge_cover_with(
    g: &MultiGraph,
    c: &CostVector,
    spec: CoverSpec,
    opts: CoverOptions,
) -> Result<EdgeSet> {
    spec.check(g)?;
    c.check(g)?;
    check_feasible(g, spec.l())?;
    if g.is_directed() {
        let double = bipartite_double(g)?;
        let b = DegreeBound::uniform(double.graph.n(), spec.l());
        return min_cost_bipartite_b_edge_cover(&double.graph, c.as_slice(), &b);
    }
    if c.is_uniform() {
        return min_size_edge_cover(g, spec);
    }
    if g.m() > opts.max_bnb_edges {
        return Err(Error::TooLarge {
            what: "weighted edge-cover branch-and-bound",
            size: g.m(),
            cap: opts.max_bnb_edges,
        });
    }
    Ok(BranchAndBound::new(g, c, spec.l()).solve())
}

/// Depth-first search over edges in decreasing cost order (ties by id),
/// trying exclusion before inclusion.
struct BranchAndBound<'a> {
    g: &'a MultiGraph,
    l: usize,
    cost: Vec<i128>,
    order: Vec<usize>,
    /// position of each edge in `order`
    rank: Vec<usize>,
    /// incident edges of each node sorted by increasing cost
    cheapest: Vec<Vec<usize>>,
    chosen_deg: Vec<usize>,
    avail_deg: Vec<usize>,
    chosen: Vec<bool>,
    best_cost: i128,
    best: Vec<bool>,
}

impl<'a> BranchAndBound<'a> {
    fn new(g: &'a MultiGraph, c: &CostVector, l: usize) -> Self {
        let (cost, _) = to_common_denominator(c.as_slice());
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.sort_by(|&a, &b| cost[b].cmp(&cost[a]).then(a.cmp(&b)));
        let mut rank = vec![0; g.m()];
        for (i, &e) in order.iter().enumerate() {
            rank[e] = i;
        }
        let cheapest = (0..g.n())
            .map(|v| {
                let mut inc = g.incident(v).to_vec();
                inc.sort_by(|&a, &b| cost[a].cmp(&cost[b]).then(a.cmp(&b)));
                inc
            })
            .collect();
        BranchAndBound {
            g,
            l,
            best_cost: cost.iter().sum(),
            best: vec![true; g.m()],
            cost,
            order,
            rank,
            cheapest,
            chosen_deg: vec![0; g.n()],
            avail_deg: g.degrees(),
            chosen: vec![false; g.m()],
        }
    }

    fn solve(mut self) -> EdgeSet {
        self.search(0, 0);
        EdgeSet::from_ids(self.g.m(), (0..self.g.m()).filter(|&e| self.best[e]))
    }

    /// Admissible completion bound for edges at positions `>= depth`: every
    /// node needs its cheapest missing incidences, and one edge serves at most
    /// two nodes.
    fn lower_bound(&self, depth: usize) -> i128 {
        let mut total = 0i128;
        let mut largest = 0i128;
        for v in 0..self.g.n() {
            let need = self.l.saturating_sub(self.chosen_deg[v]);
            if need == 0 {
                continue;
            }
            let part: i128 = self.cheapest[v]
                .iter()
                .filter(|&&e| self.rank[e] >= depth)
                .take(need)
                .map(|&e| self.cost[e])
                .sum();
            total += part;
            largest = largest.max(part);
        }
        largest.max((total + 1) / 2)
    }

    fn search(&mut self, depth: usize, cost: i128) {
        if (0..self.g.n()).all(|v| self.chosen_deg[v] >= self.l) {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best = self.chosen.clone();
            }
            return;
        }
        if depth == self.order.len() || cost + self.lower_bound(depth) >= self.best_cost {
            return;
        }
        let e = self.order[depth];
        let (u, v) = self.g.edge_list()[e];
        // exclude
        if self.avail_deg[u] > self.l && self.avail_deg[v] > self.l {
            self.avail_deg[u] -= 1;
            self.avail_deg[v] -= 1;
            self.search(depth + 1, cost);
            self.avail_deg[u] += 1;
            self.avail_deg[v] += 1;
        }
        // include
        self.chosen[e] = true;
        self.chosen_deg[u] += 1;
        self.chosen_deg[v] += 1;
        self.search(depth + 1, cost + self.cost[e]);
        self.chosen[e] = false;
        self.chosen_deg[u] -= 1;
        self.chosen_deg[v] -= 1;
    }
}

/// Which case of the bound applies.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundCase {
    /// `l n` even or `|E| >= kn/2 + k/(2l)`: value `(l/k) c(E)`.
    EvenOrLarge,
    /// Otherwise: value `((l n + 1) / (2|E|)) c(E)`.
    OddSmall,
    /// Digraphs, through their bipartite double: value `(l/k) c(E)`.
    Bipartite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverBound {
    pub value: Rational,
    pub case: BoundCase,
    /// `(l/k + 1/(kn)) c(E)`, never smaller than `value`.
    pub relaxed_value: Rational,
}

/// Upper bound on the cheapest l-edge-cover of a k-edge-connected graph.
pub fn cover_cost_bound(g: &MultiGraph, c: &CostVector, k: usize, l: usize) -> Result<CoverBound> {
    c.check(g)?;
    if l < 1 || l + 1 > k {
        return Err(Error::Parameter(format!("need 1 <= l <= k - 1, got l = {l}, k = {k}")));
    }
    let found = edge_connectivity(g)?.value;
    if found < k {
        return Err(Error::NotKEdgeConnected { k, found });
    }
    let (n, m) = (g.n() as i128, g.m() as i128);
    let (k, l) = (k as i128, l as i128);
    let total = c.total();
    let relaxed_value = (Rational::new(l, k) + Rational::new(1, k * n)) * total;
    let bound = if g.is_directed() {
        CoverBound {
            value: Rational::new(l, k) * total,
            case: BoundCase::Bipartite,
            relaxed_value,
        }
    } else if (l * n) % 2 == 0 || 2 * l * m >= l * k * n + k {
        CoverBound {
            value: Rational::new(l, k) * total,
            case: BoundCase::EvenOrLarge,
            relaxed_value,
        }
    } else {
        CoverBound {
            value: Rational::new(l * n + 1, 2 * m) * total,
            case: BoundCase::OddSmall,
            relaxed_value,
        }
    };
    debug_assert!(bound.value <= bound.relaxed_value || total.is_zero());
    Ok(bound)
}
