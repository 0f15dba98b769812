//! Cover-then-augment approximation for minimum k-connected spanning
//! subgraphs, its relaxed (k-1)-connected variant, and the budgeted
//! maximum-connectivity search built on it.
//!
//! The algorithm takes a cheapest (k-1)-edge-cover `I` and then an
//! inclusion-minimal `F` outside `I` that makes `(V, I + F)` k-connected.
//! Minimality makes `F` a forest (of the bipartite double, for digraphs), so
//! `|F| <= n - 1` (resp. `2n - 1`).

use num_traits::{One, Zero};

use crate::connectivity::{is_k_connected, is_k_connected_on, node_connectivity};
use crate::cover::{min_cost_edge_cover, min_size_edge_cover, CostVector, CoverSpec};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::rational::{int, Rational};

fn require_k_connected(g: &MultiGraph, k: usize) -> Result<()> {
    if is_k_connected(g, k) {
        Ok(())
    } else {
        let found = if g.n() < 2 { 0 } else { node_connectivity(g)?.value };
        Err(Error::NotKConnected { k, found })
    }
}

/// Scan order for reverse-delete: decreasing cost, ties by increasing id.
fn deletion_order(candidates: &EdgeSet, costs: Option<&CostVector>) -> Vec<usize> {
    let mut order = candidates.ids();
    if let Some(c) = costs {
        let c = c.as_slice();
        order.sort_by(|&a, &b| c[b].cmp(&c[a]).then(a.cmp(&b)));
    }
    order
}

/// Inclusion-minimal `F` within `E \ cover` such that `(V, cover + F)` is
/// k-connected, by reverse-delete over `E \ cover` in increasing id order.
pub fn minimal_augmentation(g: &MultiGraph, cover: &EdgeSet, k: usize) -> Result<EdgeSet> {
    minimal_augmentation_by_cost(g, cover, k, None)
}

/// Like [`minimal_augmentation`] but scanning the most expensive edges first.
pub fn minimal_augmentation_by_cost(
    g: &MultiGraph,
    cover: &EdgeSet,
    k: usize,
    costs: Option<&CostVector>,
) -> Result<EdgeSet> {
    require_k_connected(g, k)?;
    let candidates = cover.complement();
    let mut kept = EdgeSet::full(g.m());
    for e in deletion_order(&candidates, costs) {
        kept.remove(e.into());
        if !is_k_connected_on(g, &kept, k) {
            kept.insert(e.into());
        }
    }
    Ok(kept.difference(cover))
}

/// Acyclicity of `set` as an undirected edge multiset (parallel pair = cycle).
/// For digraphs the arcs are read as edges `u v'` of the bipartite double.
pub fn is_forest(g: &MultiGraph, set: &EdgeSet) -> bool {
    let offset = if g.is_directed() { g.n() } else { 0 };
    let mut parent: Vec<usize> = (0..g.n() + offset).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in set.iter() {
        let (u, v) = g.endpoints(e);
        let (a, b) = (find(&mut parent, u.0), find(&mut parent, v.0 + offset));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Guarantees evaluated on one run. Fields that need the optimum are filled
/// by [`KcsSolution::certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCertificates {
    /// `kn/2` (undirected) or `kn` (directed): every k-connected spanning
    /// subgraph has at least this many edges.
    pub size_lower_bound: Rational,
    /// `kn/2 + k/(2(k-1))`, the edge count above which the even case of the
    /// cover bound applies with `l = k - 1` (undirected, `k >= 2`).
    pub large_threshold: Option<Rational>,
    /// `kn/2 + 1`.
    pub unit_threshold: Rational,
    pub forest_limit: usize,
    pub forest_ok: bool,
    pub opt: Option<Rational>,
    /// `(1 - 1/k) opt + n` (undirected) or `+ 2n` (directed).
    pub additive_bound: Option<Rational>,
    /// `(1 + 1/k) opt`.
    pub multiplicative_bound: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KcsSolution {
    pub cover: EdgeSet,
    pub augmentation: EdgeSet,
    /// Connectivity of the returned subgraph.
    pub k: usize,
    pub total_size: usize,
    pub total_cost: Option<Rational>,
    pub lower_bound: Rational,
    pub certificates: RatioCertificates,
}

impl KcsSolution {
    pub fn edges(&self) -> EdgeSet {
        self.cover.union(&self.augmentation)
    }

    /// Fills in the optimum-dependent bounds and returns whether the run
    /// meets both of them.
    pub fn certify(&mut self, opt: Rational, directed: bool, n: usize) -> bool {
        let k = int(self.k as i128);
        let n = int(n as i128);
        let slack = if directed { int(2) * n } else { n };
        let additive = (Rational::one() - k.recip()) * opt + slack;
        let multiplicative = (Rational::one() + k.recip()) * opt;
        let value = self.total_cost.unwrap_or_else(|| int(self.total_size as i128));
        let ok = value <= additive && value <= multiplicative;
        self.certificates.opt = Some(opt);
        self.certificates.additive_bound = Some(additive);
        self.certificates.multiplicative_bound = Some(multiplicative);
        ok
    }
}

/// `(1 - 1/k + 1/(kn) + 2 beta / (k (1 - beta))) opt`.
pub fn beta_ratio_bound(k: usize, n: usize, beta: Rational, opt: Rational) -> Rational {
    let k = int(k as i128);
    let n = int(n as i128);
    let one = Rational::one();
    let ratio = one - k.recip() + (k * n).recip() + int(2) * beta / (k * (one - beta));
    ratio * opt
}

fn cover_then_augment(g: &MultiGraph, k: usize, costs: Option<&CostVector>) -> Result<KcsSolution> {
    let weighted = costs.filter(|c| !c.is_uniform());
    let cover = if k <= 1 {
        EdgeSet::empty(g.m())
    } else {
        let spec = CoverSpec::for_graph(g, k - 1)?;
        match weighted {
            Some(c) => min_cost_edge_cover(g, c, spec)?,
            None => min_size_edge_cover(g, spec)?,
        }
    };
    let augmentation = minimal_augmentation_by_cost(g, &cover, k, costs)?;
    let solution = cover.union(&augmentation);
    assert!(is_k_connected_on(g, &solution, k), "augmented subgraph lost connectivity");
    let n = g.n();
    let kq = int(k as i128);
    let nq = int(n as i128);
    let size_lower_bound = if g.is_directed() { kq * nq } else { kq * nq / int(2) };
    let certificates = RatioCertificates {
        large_threshold: (!g.is_directed() && k >= 2)
            .then(|| kq * nq / int(2) + kq / (int(2) * (kq - Rational::one()))),
        unit_threshold: kq * nq / int(2) + Rational::one(),
        forest_limit: if g.is_directed() { 2 * n - 1 } else { n.saturating_sub(1) },
        forest_ok: is_forest(g, &augmentation),
        size_lower_bound,
        opt: None,
        additive_bound: None,
        multiplicative_bound: None,
    };
    Ok(KcsSolution {
        total_size: solution.len(),
        total_cost: costs.map(|c| c.cost_of(&solution)),
        lower_bound: size_lower_bound.ceil(),
        k,
        cover,
        augmentation,
        certificates,
    })
}

/// Cover-then-augment for a k-connected `g`. Step one minimizes cost when
/// non-uniform `costs` are given, size otherwise.
pub fn algorithm1(g: &MultiGraph, k: usize, costs: Option<&CostVector>) -> Result<KcsSolution> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    require_k_connected(g, k)?;
    cover_then_augment(g, k, costs)
}

/// Cover-then-augment with `k - 1` on a k-connected `g`: a (k-1)-connected
/// spanning subgraph with at most as many edges as the smallest k-connected
/// one.
pub fn kcs_relaxed(g: &MultiGraph, k: usize) -> Result<KcsSolution> {
    if k < 2 {
        return Err(Error::Parameter(format!("relaxed variant needs k >= 2, got {k}")));
    }
    require_k_connected(g, k)?;
    cover_then_augment(g, k - 1, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetSolution {
    pub k_achieved: usize,
    pub edges: EdgeSet,
    pub m_used: usize,
}

/// Largest `j` such that cover-then-augment for connectivity `j` fits in
/// `budget` edges, scanning `j = 1, 2, ...` (the relaxed variant at `j + 1`)
/// and stopping at the first run that does not fit.
pub fn max_connectivity_m_edge_subgraph(g: &MultiGraph, budget: usize) -> Result<BudgetSolution> {
    if g.n() < 2 {
        return Err(Error::TooFewNodes(2));
    }
    let needed = if g.is_directed() { g.n() } else { g.n() - 1 };
    if budget < needed {
        return Err(Error::BudgetTooSmall { budget, needed });
    }
    let kappa = node_connectivity(g)?.value;
    if kappa == 0 {
        return Err(Error::NotKConnected { k: 1, found: 0 });
    }
    let mut best = BudgetSolution {
        k_achieved: 0,
        edges: EdgeSet::empty(g.m()),
        m_used: 0,
    };
    for j in 1..=kappa {
        let sol = cover_then_augment(g, j, None)?;
        if sol.total_size > budget {
            break;
        }
        best = BudgetSolution {
            k_achieved: j,
            m_used: sol.total_size,
            edges: sol.edges(),
        };
    }
    debug_assert!(best.m_used.is_zero() || is_k_connected_on(g, &best.edges, best.k_achieved));
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_k_connected_on;
    use crate::cover::is_edge_cover;

    fn four_cycle_in_k4() -> EdgeSet {
        // K4 edge order: 01 02 03 12 13 23; cycle 0-1-2-3-0
        EdgeSet::from_ids(6, [0, 3, 5, 2])
    }

    #[test]
    fn augmentation_examples() {
        let k4 = MultiGraph::complete(4);
        let f = minimal_augmentation(&k4, &four_cycle_in_k4(), 3).unwrap();
        assert_eq!(f.ids(), vec![1, 4]);

        let f = minimal_augmentation(&k4, &EdgeSet::full(6), 3).unwrap();
        assert!(f.is_empty());

        let tree = minimal_augmentation(&k4, &EdgeSet::empty(6), 1).unwrap();
        assert_eq!(tree.len(), 3);
        assert!(is_forest(&k4, &tree));
        assert!(is_k_connected_on(&k4, &tree, 1));

        assert!(matches!(
            minimal_augmentation(&MultiGraph::cycle(5), &EdgeSet::empty(5), 3),
            Err(Error::NotKConnected { k: 3, found: 2 })
        ));
    }

    #[test]
    fn augmentation_is_inclusion_minimal() {
        let k5 = MultiGraph::complete(5);
        let cover = EdgeSet::from_ids(10, [0, 4]);
        let f = minimal_augmentation(&k5, &cover, 3).unwrap();
        let all = cover.union(&f);
        assert!(is_k_connected_on(&k5, &all, 3));
        for e in f.iter() {
            let mut less = all.clone();
            less.remove(e);
            assert!(!is_k_connected_on(&k5, &less, 3));
        }
    }

    #[test]
    fn algorithm1_examples() {
        let k4 = MultiGraph::complete(4);
        let s = algorithm1(&k4, 3, None).unwrap();
        assert_eq!((s.cover.len(), s.augmentation.len(), s.total_size), (4, 2, 6));
        assert!(is_edge_cover(&k4, &s.cover, CoverSpec::new(2, false).unwrap()));

        let k5 = MultiGraph::complete(5);
        let mut s = algorithm1(&k5, 3, None).unwrap();
        assert!(is_k_connected_on(&k5, &s.edges(), 3));
        assert!(s.certificates.forest_ok);
        assert!(s.augmentation.len() <= 4);
        assert!(s.certify(int(8), false, 5));
        assert_eq!(s.lower_bound, int(8));

        let d3 = MultiGraph::complete_digraph(3);
        let s = algorithm1(&d3, 1, None).unwrap();
        assert!(s.cover.is_empty());
        assert!(is_k_connected_on(&d3, &s.augmentation, 1));
        assert!(s.certificates.forest_ok);
        assert!(s.augmentation.len() <= 2 * 3 - 1);
    }

    #[test]
    fn relaxed_examples() {
        let k4 = MultiGraph::complete(4);
        let s = kcs_relaxed(&k4, 3).unwrap();
        assert_eq!(s.k, 2);
        assert!(is_k_connected_on(&k4, &s.edges(), 2));
        assert!(s.total_size <= 6);

        let k5 = MultiGraph::complete(5);
        let s = kcs_relaxed(&k5, 4).unwrap();
        assert!(is_k_connected_on(&k5, &s.edges(), 3));
        assert!(s.total_size <= 10);

        let s = kcs_relaxed(&k4, 2).unwrap();
        assert!(is_k_connected_on(&k4, &s.edges(), 1));
        assert!(s.total_size <= 4);

        assert!(kcs_relaxed(&k4, 1).is_err());
        assert!(kcs_relaxed(&MultiGraph::cycle(5), 3).is_err());
    }

    #[test]
    fn budget_examples() {
        let k4 = MultiGraph::complete(4);
        assert!(max_connectivity_m_edge_subgraph(&k4, 5).unwrap().k_achieved >= 1);
        assert!(max_connectivity_m_edge_subgraph(&k4, 6).unwrap().k_achieved >= 2);
        let k5 = MultiGraph::complete(5);
        let b = max_connectivity_m_edge_subgraph(&k5, 10).unwrap();
        assert!(b.k_achieved >= 3);
        assert!(b.m_used <= 10);
        assert!(is_k_connected_on(&k5, &b.edges, b.k_achieved));
        assert_eq!(
            max_connectivity_m_edge_subgraph(&k4, 2),
            Err(Error::BudgetTooSmall { budget: 2, needed: 3 })
        );
    }

    #[test]
    fn forest_detection() {
        let g = MultiGraph::undirected(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(!is_forest(&g, &EdgeSet::from_ids(3, [0, 1])));
        assert!(is_forest(&g, &EdgeSet::from_ids(3, [0, 2])));
        // 2-cycle of arcs is a path u-v'-... in the double, not a cycle
        let d = MultiGraph::directed(2, [(0, 1), (1, 0)]).unwrap();
        assert!(is_forest(&d, &EdgeSet::full(2)));
    }

    #[test]
    fn beta_bound_at_half_is_size_ratio() {
        let b = beta_ratio_bound(2, 5, Rational::new(1, 2), int(10));
        // 1 - 1/2 + 1/10 + 1 = 8/5
        assert_eq!(b, int(16));
    }
}
