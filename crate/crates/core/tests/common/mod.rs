//! Test support: small-graph enumeration and brute-force references.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kcover::MultiGraph;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut next = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = next;
            idx[v][u] = next;
            next += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Simple graphs on `n` nodes as pair bitmasks, one per isomorphism class,
/// smallest canonical mask first. Built by attaching a new node to every
/// class on `n - 1` nodes in every possible way.
pub fn graph_classes(n: usize) -> Vec<u32> {
    assert!(n <= 7);
    if n <= 1 {
        return vec![0];
    }
    let idx = pair_index(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let maps: Vec<Vec<u32>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| 1u32 << idx[p[u]][p[v]]).collect())
        .collect();
    let canon = |mask: u32| {
        maps.iter()
            .map(|map| {
                let mut out = 0;
                let mut rest = mask;
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    out |= map[b];
                    rest &= rest - 1;
                }
                out
            })
            .min()
            .unwrap()
    };
    let small = pair_index(n - 1);
    let mut seen = BTreeSet::new();
    for base in graph_classes(n - 1) {
        let mut lifted = 0u32;
        for u in 0..n - 1 {
            for v in u + 1..n - 1 {
                if base >> small[u][v] & 1 == 1 {
                    lifted |= 1 << idx[u][v];
                }
            }
        }
        for nb in 0u32..1 << (n - 1) {
            let mut mask = lifted;
            for u in 0..n - 1 {
                if nb >> u & 1 == 1 {
                    mask |= 1 << idx[u][n - 1];
                }
            }
            seen.insert(canon(mask));
        }
    }
    seen.into_iter().collect()
}

pub fn graph_from_mask(n: usize, mask: u32) -> MultiGraph {
    let idx = pair_index(n);
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| mask >> idx[u][v] & 1 == 1);
    MultiGraph::undirected(n, edges).unwrap()
}

/// One graph per isomorphism class for every `n` in `lo..=hi`.
pub fn graphs_up_to_iso(lo: usize, hi: usize) -> Vec<MultiGraph> {
    (lo..=hi)
        .flat_map(|n| graph_classes(n).into_iter().map(move |m| graph_from_mask(n, m)))
        .collect()
}

/// Every labeled simple digraph on `n` nodes.
pub fn labeled_digraphs(n: usize) -> impl Iterator<Item = MultiGraph> {
    let arcs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    (0u64..1 << arcs.len()).map(move |mask| {
        let chosen = arcs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a);
        MultiGraph::directed(n, chosen).unwrap()
    })
}

/// Whether the nodes outside `removed` induce a (strongly) connected graph.
pub fn connected_without(g: &MultiGraph, removed: u64) -> bool {
    let n = g.n();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in g.edge_list() {
                let (from, to) = if forward || !g.is_directed() { (a, b) } else { (b, a) };
                let step = |x: usize, y: usize, seen: &mut Vec<bool>, stack: &mut Vec<usize>| {
                    if x == u && removed >> y & 1 == 0 && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                };
                step(from, to, &mut seen, &mut stack);
                if !g.is_directed() {
                    step(to, from, &mut seen, &mut stack);
                }
            }
        }
        alive.iter().all(|&v| seen[v])
    };
    reach(true) && (!g.is_directed() || reach(false))
}

/// Minimum number of edges leaving a nonempty proper node subset.
pub fn brute_edge_connectivity(g: &MultiGraph) -> usize {
    let n = g.n();
    (1u64..(1 << n) - 1)
        .map(|s| {
            g.edge_list()
                .iter()
                .filter(|&&(u, v)| {
                    let (a, b) = (s >> u & 1 == 1, s >> v & 1 == 1);
                    if g.is_directed() {
                        a && !b
                    } else {
                        a != b
                    }
                })
                .count()
        })
        .min()
        .unwrap_or(0)
}

/// Smallest node set whose removal disconnects; `n - 1` when none does.
pub fn brute_node_connectivity(g: &MultiGraph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for removed in 0u64..1 << n {
        let size = removed.count_ones() as usize;
        if size < best && size + 2 <= n && !connected_without(g, removed) {
            best = size;
        }
    }
    best
}

/// Largest edge subset with `deg(v) <= b[v]`.
pub fn brute_b_matching(g: &MultiGraph, b: &[usize]) -> usize {
    let mut best = 0;
    for mask in 0u64..1 << g.m() {
        let mut deg = vec![0; g.n()];
        for (i, &(u, v)) in g.edge_list().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().zip(b).all(|(d, cap)| d <= cap) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Undirected multigraph with `m` random non-loop edges on `n` nodes.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> MultiGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    MultiGraph::undirected(n, edges).unwrap()
}
