//! Brute-force reference solvers.
//!
//! These only use the graph types and the `is_k_connected` predicate, never
//! the matching, cover or augmentation code they are meant to check.

use crate::connectivity::{is_k_connected, is_k_connected_on};
use crate::cover::{CostVector, CoverSpec};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::rational::{to_common_denominator, Rational};

/// Default edge cap of the subset enumerations.
pub const ORACLE_MAX_EDGES: usize = 20;

fn check_cap(g: &MultiGraph, cap: usize) -> Result<()> {
    let cap = cap.min(63);
    if g.m() > cap {
        return Err(Error::TooLarge {
            what: "brute-force enumeration",
            size: g.m(),
            cap,
        });
    }
    Ok(())
}

/// Per-node masks of outgoing and incoming edges (both equal when undirected).
struct Incidence {
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Incidence {
    fn new(g: &MultiGraph) -> Incidence {
        let mut out = vec![0u64; g.n()];
        let mut inn = vec![0u64; g.n()];
        for (i, &(u, v)) in g.edge_list().iter().enumerate() {
            out[u] |= 1 << i;
            inn[v] |= 1 << i;
            if !g.is_directed() {
                out[v] |= 1 << i;
                inn[u] |= 1 << i;
            }
        }
        Incidence { out, inn }
    }

    fn min_degree_at_least(&self, mask: u64, l: u32) -> bool {
        self.out.iter().zip(&self.inn).all(|(&o, &i)| (mask & o).count_ones() >= l && (mask & i).count_ones() >= l)
    }
}

fn mask_to_set(m: usize, mask: u64) -> EdgeSet {
    EdgeSet::from_mask(m, mask)
}

fn ids(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// All `m`-bit masks with exactly `r` bits set, in increasing order.
fn combinations(m: usize, r: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << m;
    let mut next = if r == 0 { Some(0) } else if r <= m { Some((1u64 << r) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let n = (((ripple ^ cur) >> 2) / low) | ripple;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}

/// Exact minimum-cost l-edge-cover over all `2^m` subsets; ties go to the
/// lexicographically smallest sorted id list.
pub fn brute_min_cost_edge_cover(g: &MultiGraph, c: &CostVector, spec: CoverSpec) -> Result<(Rational, EdgeSet)> {
    check_cap(g, ORACLE_MAX_EDGES)?;
    if c.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: c.len(),
        });
    }
    if spec.directed() != g.is_directed() {
        return Err(Error::Orientation {
            expected: if spec.directed() { "directed" } else { "undirected" },
        });
    }
    let inc = Incidence::new(g);
    let l = spec.l() as u32;
    let full = if g.m() == 0 { 0 } else { u64::MAX >> (64 - g.m()) };
    if !inc.min_degree_at_least(full, l) {
        let (node, degree) = (0..g.n())
            .map(|v| (v, (inc.out[v].count_ones()).min(inc.inn[v].count_ones()) as usize))
            .find(|&(_, d)| d < spec.l())
            .expect("some node is short");
        return Err(Error::Infeasible {
            node,
            degree,
            demand: spec.l(),
        });
    }
    let (w, den) = to_common_denominator(c.as_slice());
    let mut best: Option<(i128, u64)> = None;
    for mask in 0..=full {
        if !inc.min_degree_at_least(mask, l) {
            continue;
        }
        let cost: i128 = (0..g.m()).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).sum();
        best = match best {
            Some((b, bm)) if cost > b || (cost == b && ids(bm) <= ids(mask)) => Some((b, bm)),
            _ => Some((cost, mask)),
        };
    }
    let (cost, mask) = best.expect("full edge set is a cover");
    Ok((Rational::new(cost, den), mask_to_set(g.m(), mask)))
}

/// Minimum size of a k-connected spanning subgraph, scanning subsets by
/// increasing size. The witness is the first hit in increasing mask order.
pub fn brute_opt_kcs(g: &MultiGraph, k: usize) -> Result<(usize, EdgeSet)> {
    brute_opt_kcs_capped(g, k, ORACLE_MAX_EDGES)
}

pub fn brute_opt_kcs_capped(g: &MultiGraph, k: usize, cap: usize) -> Result<(usize, EdgeSet)> {
    check_cap(g, cap)?;
    require_k_connected(g, k)?;
    let inc = Incidence::new(g);
    let n = g.n();
    let lower = if g.is_directed() { k * n } else { (k * n).div_ceil(2) };
    for size in lower..=g.m() {
        for mask in combinations(g.m(), size) {
            if !inc.min_degree_at_least(mask, k as u32) {
                continue;
            }
            let set = mask_to_set(g.m(), mask);
            if is_k_connected_on(g, &set, k) {
                return Ok((size, set));
            }
        }
    }
    unreachable!("g itself is k-connected")
}

fn require_k_connected(g: &MultiGraph, k: usize) -> Result<()> {
    if is_k_connected(g, k) {
        return Ok(());
    }
    let found = (0..k).rev().find(|&j| is_k_connected(g, j)).unwrap_or(0);
    Err(Error::NotKConnected { k, found })
}

/// Minimum cost of a k-connected spanning subgraph by exhaustive
/// include/exclude search over edges in increasing cost order, pruned by
/// per-node degree deficits.
pub fn brute_opt_kcs_cost(g: &MultiGraph, k: usize, c: &CostVector, cap: usize) -> Result<(Rational, EdgeSet)> {
    check_cap(g, cap)?;
    if c.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: c.len(),
        });
    }
    require_k_connected(g, k)?;
    let (w, den) = to_common_denominator(c.as_slice());
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| (w[e], e));
    let mut search = CostSearch {
        g,
        k,
        w: order.iter().map(|&e| w[e]).collect(),
        ends: order.iter().map(|&e| g.edge_list()[e]).collect(),
        order,
        out_deg: vec![0; g.n()],
        in_deg: vec![0; g.n()],
        best: w.iter().sum::<i128>() + 1,
        best_mask: None,
    };
    search.run(0, 0, 0);
    let mask = search.best_mask.expect("g itself is k-connected");
    Ok((Rational::new(search.best, den), mask_to_set(g.m(), mask)))
}

struct CostSearch<'a> {
    g: &'a MultiGraph,
    k: usize,
    /// Costs, endpoints and original ids in search order.
    w: Vec<i128>,
    ends: Vec<(usize, usize)>,
    order: Vec<usize>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    best: i128,
    best_mask: Option<u64>,
}

impl CostSearch<'_> {
    /// Cheapest way to close every degree deficit with edges from `pos` on,
    /// or `None` when some node cannot reach degree `k`.
    fn lower_bound(&self, pos: usize) -> Option<i128> {
        let directed = self.g.is_directed();
        let mut total = 0i128;
        for v in 0..self.g.n() {
            for (deg, incoming) in [(self.out_deg[v], false), (self.in_deg[v], true)] {
                let mut need = self.k.saturating_sub(deg);
                if need == 0 || (!directed && incoming) {
                    continue;
                }
                for i in pos..self.w.len() {
                    let (a, b) = self.ends[i];
                    let touches = if !directed {
                        a == v || b == v
                    } else if incoming {
                        b == v
                    } else {
                        a == v
                    };
                    if touches {
                        total += self.w[i];
                        need -= 1;
                        if need == 0 {
                            break;
                        }
                    }
                }
                if need > 0 {
                    return None;
                }
            }
        }
        // each edge closes at most two deficits
        Some((total + 1) / 2)
    }

    fn degrees_met(&self) -> bool {
        self.out_deg.iter().chain(&self.in_deg).all(|&d| d >= self.k)
    }

    fn bump(&mut self, i: usize, up: bool) {
        let (a, b) = self.ends[i];
        let apply = |d: &mut usize| if up { *d += 1 } else { *d -= 1 };
        if self.g.is_directed() {
            apply(&mut self.out_deg[a]);
            apply(&mut self.in_deg[b]);
        } else {
            for v in [a, b] {
                apply(&mut self.out_deg[v]);
                apply(&mut self.in_deg[v]);
            }
        }
    }

    fn run(&mut self, pos: usize, mask: u64, cost: i128) {
        if cost >= self.best {
            return;
        }
        if self.degrees_met() && is_k_connected_on(self.g, &mask_to_set(self.g.m(), mask), self.k) {
            self.best = cost;
            self.best_mask = Some(mask);
            return;
        }
        if pos == self.w.len() {
            return;
        }
        match self.lower_bound(pos) {
            Some(lb) if cost + lb < self.best => {}
            _ => return,
        }
        self.bump(pos, true);
        self.run(pos + 1, mask | 1 << self.order[pos], cost + self.w[pos]);
        self.bump(pos, false);
        self.run(pos + 1, mask, cost);
    }
}

/// Largest k such that some spanning subgraph with at most `budget` edges is
/// k-connected (0 when none is connected).
pub fn brute_max_conn_m_edges(g: &MultiGraph, budget: usize) -> Result<usize> {
    brute_max_conn_m_edges_capped(g, budget, ORACLE_MAX_EDGES)
}

pub fn brute_max_conn_m_edges_capped(g: &MultiGraph, budget: usize, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    // connectivity only grows with edges, so the largest subsets suffice
    let size = budget.min(g.m());
    let mut best = 0;
    for mask in combinations(g.m(), size) {
        let set = mask_to_set(g.m(), mask);
        while best + 1 < g.n() && is_k_connected_on(g, &set, best + 1) {
            best += 1;
        }
    }
    Ok(best)
}
