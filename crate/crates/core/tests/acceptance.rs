//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.
//!
//! Run with `cargo test -p kcover-core --test acceptance`.

mod common;

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use kcover::connectivity::{edge_connectivity, fractional_edge_connectivity, is_k_connected, is_k_connected_on, node_connectivity};
use kcover::cover::{cover_cost_bound, is_edge_cover, min_cost_edge_cover, min_size_edge_cover, BoundCase, CostVector, CoverSpec};
use kcover::generate::{beta_metric_instance, harary, random_costs, random_k_connected_digraph, random_k_edge_connected};
use kcover::kcs::{algorithm1, beta_ratio_bound, is_forest, kcs_relaxed, max_connectivity_m_edge_subgraph, KcsSolution};
use kcover::matching::{DegreeBound, Gadget};
use kcover::oracle::{brute_max_conn_m_edges_capped, brute_min_cost_edge_cover, brute_opt_kcs_capped, brute_opt_kcs_cost};
use kcover::polytope::{check_reduced_inequality, check_zeta_decomposition, perturbed_feasible_point, verify_scaling, EnumerationOptions, FracVector};
use kcover::rational::{int, ratio};
use kcover::{MultiGraph, Rational};

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Cap for oracles on the 7-node complete graph.
const ORACLE_CAP: usize = 21;

fn cover_family(k: usize, max_n: usize) -> Vec<(String, MultiGraph)> {
    let mut out = Vec::new();
    for n in 4..=max_n.min(10) {
        if k < n {
            out.push((format!("harary({k},{n})"), harary(k, n).unwrap()));
        }
    }
    for n in 2..=max_n.min(8) {
        for extra in [0, 2] {
            for seed in 0..20 {
                let g = random_k_edge_connected(n, k, extra, seed).unwrap();
                out.push((format!("random({n},{k},{extra},{seed})"), g));
            }
        }
    }
    out
}

fn triangle_tightness() -> Verdict {
    let t = MultiGraph::cycle(3);
    let size = min_size_edge_cover(&t, CoverSpec::new(1, false).unwrap()).unwrap().len();
    let (brute, _) = brute_min_cost_edge_cover(&t, &CostVector::unit(3), CoverSpec::new(1, false).unwrap()).unwrap();
    let bound = cover_cost_bound(&t, &CostVector::unit(3), 2, 1).unwrap();
    ensure!(size == 2 && brute == int(2), "min 1-cover size {size}, oracle {brute}");
    ensure!(bound.case == BoundCase::OddSmall, "bound case {:?}", bound.case);
    ensure!(bound.value == int(2), "bound {}", bound.value);
    Ok(format!("min cover 2 = odd-small bound {}", bound.value))
}

fn cover_bound_sweep() -> Verdict {
    let mut checked = 0;
    let mut tight = 0;
    for k in 2..=4 {
        for (name, g) in cover_family(k, 10) {
            let costs = [CostVector::unit(g.m()), random_costs(g.m(), checked as u64)];
            for l in 1..k {
                let spec = CoverSpec::new(l, false).unwrap();
                for c in &costs {
                    let cover = min_cost_edge_cover(&g, c, spec).unwrap();
                    ensure!(is_edge_cover(&g, &cover, spec), "{name} l={l}: not a cover");
                    let cost = c.cost_of(&cover);
                    if g.m() <= 14 {
                        let (brute, _) = brute_min_cost_edge_cover(&g, c, spec).unwrap();
                        ensure!(cost == brute, "{name} l={l}: solver {cost} vs oracle {brute}");
                    }
                    let bound = cover_cost_bound(&g, c, k, l).unwrap();
                    ensure!(cost <= bound.value, "{name} k={k} l={l}: cost {cost} > bound {}", bound.value);
                    ensure!(bound.value <= bound.relaxed_value, "{name}: bound above relaxed bound");
                    tight += usize::from(cost == bound.value);
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} covers within bound, {tight} tight"))
}

fn abstract_size_bound() -> Verdict {
    let mut checked = 0;
    for k in 2..=4 {
        for (name, g) in cover_family(k, 10) {
            let size = min_size_edge_cover(&g, CoverSpec::new(k - 1, false).unwrap()).unwrap().len();
            let cap = g.m() - g.n() / 2;
            ensure!(size <= cap, "{name}: min {}-cover {size} > |E| - n/2 = {cap}", k - 1);
            checked += 1;
        }
    }
    let k5 = MultiGraph::complete(5);
    let size = min_size_edge_cover(&k5, CoverSpec::new(3, false).unwrap()).unwrap().len();
    ensure!(size == 8, "K5 min 3-cover is {size}, expected 8 = 10 - 2");
    Ok(format!("{checked} instances, K5 k=4 equality 8 = 10 - 2"))
}

fn scaling_verification() -> Verdict {
    let opts = EnumerationOptions {
        max_cut_edges: 24,
        ..EnumerationOptions::exhaustive()
    };
    let mut runs = 0;
    for k in 2..=4 {
        for (name, g) in cover_family(k, 8) {
            let mut points = vec![FracVector::ones(g.m())];
            for seed in 0..5 {
                points.push(perturbed_feasible_point(&g, k, seed).unwrap());
            }
            for (i, x) in points.iter().enumerate() {
                ensure!(check_zeta_decomposition(&g, x, k).unwrap().is_none(), "{name} x#{i}: zeta identity");
                for l in 1..k {
                    let r = verify_scaling(&g, x, k, l, &opts).unwrap();
                    ensure!(r.scaled.ok, "{name} x#{i} l={l}: mu = {} fails at {:?}", r.scale.mu, r.scaled.violation);
                    ensure!(r.relaxed.ok, "{name} x#{i} l={l}: relaxed factor fails at {:?}", r.relaxed.violation);
                    ensure!(r.factor_comparison_ok, "{name} x#{i} l={l}: factor comparison");
                    let bad = check_reduced_inequality(&g, x, k, l, &opts).unwrap();
                    ensure!(bad.is_none(), "{name} x#{i} l={l}: reduced inequality fails at {bad:?}");
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} (instance, x, l) triples, full enumeration"))
}

/// Per-run observations shared by the ratio and forest criteria.
#[derive(Default)]
struct RunLog {
    runs: usize,
    forest_failures: Vec<String>,
}

impl RunLog {
    fn record(&mut self, name: &str, g: &MultiGraph, sol: &KcsSolution) -> Result<(), String> {
        self.runs += 1;
        let limit = if g.is_directed() { 2 * g.n() - 1 } else { g.n() - 1 };
        if !is_forest(g, &sol.augmentation) || sol.augmentation.len() > limit || !sol.certificates.forest_ok {
            self.forest_failures.push(name.to_string());
        }
        let all = sol.edges();
        ensure!(is_k_connected_on(g, &all, sol.k), "{name}: output not {}-connected", sol.k);
        for e in sol.augmentation.iter() {
            let mut less = all.clone();
            less.remove(e);
            ensure!(!is_k_connected_on(g, &less, sol.k), "{name}: augmentation edge {} is redundant", e.0);
        }
        Ok(())
    }
}

/// Oracle optima keyed by (pool index, k).
struct Pool {
    graphs: Vec<MultiGraph>,
    opt: HashMap<(usize, usize), usize>,
}

impl Pool {
    fn new() -> Pool {
        Pool {
            graphs: common::graphs_up_to_iso(3, 7),
            opt: HashMap::new(),
        }
    }

    fn opt(&mut self, i: usize, k: usize) -> usize {
        let g = &self.graphs[i];
        *self
            .opt
            .entry((i, k))
            .or_insert_with(|| brute_opt_kcs_capped(g, k, ORACLE_CAP).unwrap().0)
    }
}

fn size_ratios(pool: &mut Pool, log: &mut RunLog) -> Verdict {
    let mut undirected = 0;
    for k in 2..=4 {
        for i in 0..pool.graphs.len() {
            if !is_k_connected(&pool.graphs[i], k) {
                continue;
            }
            let opt = pool.opt(i, k);
            let g = &pool.graphs[i];
            let name = format!("graph #{i} (n={}, m={}) k={k}", g.n(), g.m());
            let mut sol = algorithm1(g, k, None).unwrap();
            log.record(&name, g, &sol)?;
            ensure!(sol.certify(int(opt as i128), false, g.n()), "{name}: size {} vs opt {opt}", sol.total_size);
            undirected += 1;
        }
    }
    let mut digraphs: Vec<(String, MultiGraph)> = Vec::new();
    for n in 2..=5 {
        digraphs.push((format!("complete digraph {n}"), MultiGraph::complete_digraph(n)));
    }
    for n in 3..=5 {
        for k in 1..n.min(4) {
            for extra in [0, 3, 6] {
                for seed in 0..4 {
                    let g = random_k_connected_digraph(n, k, extra, seed).unwrap();
                    digraphs.push((format!("digraph({n},{k},{extra},{seed})"), g));
                }
            }
        }
    }
    let mut directed = 0;
    for (name, g) in &digraphs {
        for k in 1..=3 {
            if !is_k_connected(g, k) {
                continue;
            }
            let (opt, _) = brute_opt_kcs_capped(g, k, ORACLE_CAP).unwrap();
            let mut sol = algorithm1(g, k, None).unwrap();
            let name = format!("{name} k={k}");
            log.record(&name, g, &sol)?;
            ensure!(sol.certify(int(opt as i128), true, g.n()), "{name}: size {} vs opt {opt}", sol.total_size);
            directed += 1;
        }
    }
    Ok(format!("{undirected} undirected and {directed} directed runs within both bounds"))
}

fn forest_property(log: &RunLog) -> Verdict {
    ensure!(
        log.forest_failures.is_empty(),
        "{} of {} runs: {:?}",
        log.forest_failures.len(),
        log.runs,
        &log.forest_failures[..log.forest_failures.len().min(5)]
    );
    Ok(format!("{} runs, every augmentation a forest", log.runs))
}

fn beta_ratios(log: &mut RunLog) -> Verdict {
    let mut runs = 0;
    for n in 5..=7 {
        for beta in [ratio(1, 2), ratio(2, 3), ratio(3, 4)] {
            for seed in 0..10 {
                let inst = beta_metric_instance(n, beta, seed).unwrap();
                for k in 2..=3 {
                    let name = format!("beta n={n} beta={beta} seed={seed} k={k}");
                    let sol = algorithm1(&inst.graph, k, Some(&inst.costs)).unwrap();
                    log.record(&name, &inst.graph, &sol)?;
                    let (opt, _) = brute_opt_kcs_cost(&inst.graph, k, &inst.costs, ORACLE_CAP).unwrap();
                    let cost = sol.total_cost.unwrap();
                    let bound = beta_ratio_bound(k, n, beta, opt);
                    ensure!(cost <= bound, "{name}: cost {cost} > {bound} (opt {opt})");
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} runs within the beta-metric ratio"))
}

fn relaxed_variant(pool: &mut Pool) -> Verdict {
    let mut runs = 0;
    for k in 2..=4 {
        for i in 0..pool.graphs.len() {
            if !is_k_connected(&pool.graphs[i], k) {
                continue;
            }
            let opt = pool.opt(i, k);
            let g = &pool.graphs[i];
            let sol = kcs_relaxed(g, k).unwrap();
            ensure!(is_k_connected_on(g, &sol.edges(), k - 1), "graph #{i} k={k}: not {}-connected", k - 1);
            ensure!(sol.total_size <= opt, "graph #{i} k={k}: {} edges > opt {opt}", sol.total_size);
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, (k-1)-connected within opt(k) edges"))
}

fn budgeted_connectivity() -> Verdict {
    let mut graphs = vec![("K4".to_string(), MultiGraph::complete(4)), ("K5".to_string(), MultiGraph::complete(5))];
    for n in 5..=7 {
        for k in 2..n {
            let g = harary(k, n).unwrap();
            if g.m() <= 20 {
                graphs.push((format!("harary({k},{n})"), g));
            }
        }
    }
    let mut runs = 0;
    for (name, g) in &graphs {
        for budget in g.n() - 1..=g.m() {
            let sol = max_connectivity_m_edge_subgraph(g, budget).unwrap();
            let best = brute_max_conn_m_edges_capped(g, budget, ORACLE_CAP).unwrap();
            ensure!(sol.k_achieved + 1 >= best, "{name} m={budget}: achieved {} vs optimum {best}", sol.k_achieved);
            ensure!(sol.m_used <= budget && sol.edges.len() == sol.m_used, "{name} m={budget}: uses {} edges", sol.m_used);
            ensure!(is_k_connected_on(g, &sol.edges, sol.k_achieved), "{name} m={budget}: not {}-connected", sol.k_achieved);
            runs += 1;
        }
    }
    Ok(format!("{runs} (instance, budget) pairs"))
}

fn engine_identities() -> Verdict {
    let mut small: Vec<MultiGraph> = common::graphs_up_to_iso(2, 5);
    for seed in 0..300u64 {
        let n = 2 + seed as usize % 5;
        let m = 1 + (seed as usize * 7) % 12;
        small.push(common::random_multigraph(n, m, seed));
    }
    let mut gadget_checks = 0;
    let mut cover_checks = 0;
    for (gi, g) in small.iter().enumerate() {
        let degrees = g.degrees();
        let mut bounds: Vec<Vec<usize>> = (0..3).map(|b| vec![b; g.n()]).collect();
        bounds.push(degrees.iter().enumerate().map(|(v, d)| (d + v) % 3).collect());
        for l in 1..=g.min_degree() {
            bounds.push(DegreeBound::cover_complement(&degrees, l).0);
        }
        for b in bounds {
            let nu = common::brute_b_matching(g, &b);
            let (chosen, size) = Gadget::build(g, &DegreeBound(b.clone())).solve();
            ensure!(chosen.len() == nu, "graph {gi} b={b:?}: b-matching {} vs brute {nu}", chosen.len());
            ensure!(size == g.m() + nu, "graph {gi} b={b:?}: gadget {size} != m + {nu}");
            gadget_checks += 1;
        }
        for l in 1..=g.min_degree() {
            let spec = CoverSpec::new(l, false).unwrap();
            let size = min_size_edge_cover(g, spec).unwrap().len();
            let nu = common::brute_b_matching(g, &DegreeBound::cover_complement(&degrees, l).0);
            let (brute, _) = brute_min_cost_edge_cover(g, &CostVector::unit(g.m()), spec).unwrap();
            ensure!(size == g.m() - nu && int(size as i128) == brute, "graph {gi} l={l}: cover {size}, m - nu = {}, brute {brute}", g.m() - nu);
            cover_checks += 1;
        }
    }
    let mut conn_checks = 0;
    let undirected = common::graphs_up_to_iso(2, 7);
    let directed: Vec<MultiGraph> = (2..=4).flat_map(common::labeled_digraphs).collect();
    for g in undirected.iter().chain(&directed) {
        let lambda = edge_connectivity(g).unwrap().value;
        let kappa = node_connectivity(g).unwrap().value;
        let frac = fractional_edge_connectivity(g, &vec![Rational::from_integer(1); g.m()]).unwrap().value;
        let (bl, bk) = (common::brute_edge_connectivity(g), common::brute_node_connectivity(g));
        ensure!(lambda == bl && kappa == bk, "{:?}: lambda {lambda}/{bl}, kappa {kappa}/{bk}", g.edge_list());
        ensure!(frac == int(bl as i128), "{:?}: fractional {frac}", g.edge_list());
        let dmin = (0..g.n())
            .map(|v| if g.is_directed() { g.out_degree(v).min(g.in_degree(v)) } else { g.degree(v) })
            .min()
            .unwrap();
        ensure!(kappa <= lambda && lambda <= dmin, "{:?}: kappa <= lambda <= min degree fails", g.edge_list());
        conn_checks += 1;
    }
    Ok(format!("{gadget_checks} gadget, {cover_checks} complement, {conn_checks} connectivity checks"))
}

fn main() {
    let started = Instant::now();
    let mut pool = Pool::new();
    let mut log = RunLog::default();
    let run = |f: &mut dyn FnMut() -> Verdict| {
        let t = Instant::now();
        let v = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        (v, t.elapsed())
    };
    let mut results = vec![
        (1, "triangle tightness", run(&mut triangle_tightness)),
        (2, "cover cost bound sweep", run(&mut cover_bound_sweep)),
        (3, "|E| - floor(n/2) cover size bound", run(&mut abstract_size_bound)),
        (4, "scaled points in the integral cover polytope", run(&mut scaling_verification)),
        (5, "size ratios against the oracle optimum", run(&mut || size_ratios(&mut pool, &mut log))),
        (7, "beta-metric cost ratio", run(&mut || beta_ratios(&mut log))),
        (8, "relaxed variant within opt(k)", run(&mut || relaxed_variant(&mut pool))),
        (9, "budgeted maximum connectivity", run(&mut budgeted_connectivity)),
        (10, "engine identities and connectivity", run(&mut engine_identities)),
    ];
    let forest = run(&mut || forest_property(&log));
    results.insert(5, (6, "augmentation is a forest", forest));
    let mut failed = 0;
    for (id, name, (verdict, took)) in &results {
        match verdict {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{:.1}s]", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {why} [{:.1}s]", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", results.len() - failed, started.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
