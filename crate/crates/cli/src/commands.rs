//! Subcommands and their dispatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use kcover::connectivity::{edge_connectivity, is_k_connected_on, node_connectivity, Witness};
use kcover::cover::{cover_cost_bound, is_edge_cover, min_cost_edge_cover_with, min_size_edge_cover, CostVector, CoverOptions, CoverSpec};
use kcover::generate::{beta_metric_instance, harary, random_costs, random_k_connected_digraph, random_k_edge_connected};
use kcover::kcs::{algorithm1, kcs_relaxed, max_connectivity_m_edge_subgraph, KcsSolution};
use kcover::oracle::{brute_max_conn_m_edges_capped, brute_min_cost_edge_cover, brute_opt_kcs_capped, brute_opt_kcs_cost};
use kcover::polytope::{perturbed_feasible_point, verify_scaling, EnumerationOptions, FamilyMode, FracVector, MembershipVerdict};
use kcover::rational::{self, int, to_pq};
use kcover::MultiGraph;
use rayon::prelude::*;
use thiserror::Error;

use crate::format::{normalize, parse_graph, serialize_graph, ParseError};
use crate::report::{digest, RunReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Solver { path: String, source: kcover::Error },
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "kcover", version, about = "Edge-cover and k-connected subgraph solvers")]
pub struct Cli {
    /// Emit one JSON object per report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads when several input files are given.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum-size l-edge-cover, optionally checked against the cost bound for k.
    Cover {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Minimum-cost l-edge-cover using the file's costs (unit when absent).
    CoverCost {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Largest edge count for the undirected weighted search.
        #[arg(long, default_value_t = 24)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Cover-then-augment k-connected spanning subgraph.
    Kcs {
        #[arg(long)]
        k: usize,
        /// Also compute the optimum by enumeration and check the ratio bounds.
        #[arg(long)]
        opt: bool,
        #[arg(long, default_value_t = 20)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// (k-1)-connected spanning subgraph with at most opt(k) edges.
    KcsRelaxed {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        opt: bool,
        #[arg(long, default_value_t = 20)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Highest connectivity reachable within an edge budget.
    MaxConn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        opt: bool,
        #[arg(long, default_value_t = 20)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Edge and node connectivity with witnesses.
    Conn {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check that scaled connectivity points lie in the integral cover polytope.
    #[command(name = "verify-scaling", alias = "verify-thm1")]
    VerifyScaling {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = PointSource::Ones)]
        x: PointSource,
        /// Seed for `--x perturbed`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every subset F instead of the heaviest per size.
        #[arg(long)]
        exhaustive: bool,
        /// Largest node count for subset enumeration.
        #[arg(long, default_value_t = 10)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Write a generated instance to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Brute-force reference values.
    Oracle {
        #[command(subcommand)]
        kind: OracleKind,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointSource {
    /// All ones.
    Ones,
    /// Seeded random decrease of all ones keeping every cut at least k.
    Perturbed,
    /// The cost column of the file.
    Costs,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    Harary {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// k-edge-connected multigraph with random extra edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Attach random rational costs.
        #[arg(long)]
        costs: bool,
    },
    /// Complete graph with beta-triangle costs.
    Beta {
        #[arg(long)]
        n: usize,
        /// Rational in [1/2, 1), e.g. 2/3.
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Simple k-connected digraph with random extra arcs.
    Digraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleKind {
    /// Cheapest l-edge-cover over all edge subsets.
    Cover {
        #[arg(long)]
        l: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Smallest (or cheapest, with costs) k-connected spanning subgraph.
    Kcs {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Highest connectivity of a spanning subgraph with at most m edges.
    MaxConn {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        max_enum: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// Everything a command printed, and whether all checks passed.
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

pub struct Instance {
    pub name: String,
    pub graph: MultiGraph,
    pub costs: Option<CostVector>,
    pub digest: String,
}

pub fn load(path: &Path) -> Result<Instance, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    load_text(&name, &text)
}

pub fn load_text(name: &str, text: &str) -> Result<Instance, CliError> {
    let parse_err = |source| CliError::Parse {
        path: name.to_string(),
        source,
    };
    let (graph, costs) = parse_graph(text).map_err(parse_err)?;
    Ok(Instance {
        name: name.to_string(),
        digest: digest(&normalize(text).map_err(parse_err)?),
        graph,
        costs,
    })
}

fn files_of(cmd: &Command) -> Option<&[PathBuf]> {
    match cmd {
        Command::Cover { files, .. }
        | Command::CoverCost { files, .. }
        | Command::Kcs { files, .. }
        | Command::KcsRelaxed { files, .. }
        | Command::MaxConn { files, .. }
        | Command::Conn { files }
        | Command::VerifyScaling { files, .. } => Some(files),
        Command::Oracle { kind } => match kind {
            OracleKind::Cover { files, .. } | OracleKind::Kcs { files, .. } | OracleKind::MaxConn { files, .. } => Some(files),
        },
        Command::Gen { .. } => None,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Gen { kind } = &cli.command {
        return Ok(Outcome {
            stdout: generate(kind)?,
            ok: true,
        });
    }
    let files = files_of(&cli.command).expect("file command");
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let reports: Vec<Result<RunReport, CliError>> =
        pool.install(|| files.par_iter().map(|p| load(p).and_then(|inst| run_on(&cli.command, &inst))).collect());
    let mut stdout = String::new();
    let mut ok = true;
    for r in reports {
        let r = r?;
        ok &= r.ok();
        if cli.json {
            stdout.push_str(&r.to_json().to_string());
            stdout.push('\n');
        } else {
            stdout.push_str(&r.to_text());
        }
    }
    Ok(Outcome { stdout, ok })
}

/// Runs a file command on one loaded instance.
pub fn run_on(cmd: &Command, inst: &Instance) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let solver = |source| CliError::Solver {
        path: inst.name.clone(),
        source,
    };
    let g = &inst.graph;
    let costs = || inst.costs.clone().unwrap_or_else(|| CostVector::unit(g.m()));
    let mut r;
    match cmd {
        Command::Cover { l, k, .. } => {
            r = RunReport::new("cover");
            let spec = CoverSpec::for_graph(g, *l).map_err(solver)?;
            let cover = min_size_edge_cover(g, spec).map_err(solver)?;
            r.int("size", cover.len()).set("edges", &cover);
            r.check("cover", is_edge_cover(g, &cover, spec), format!("min degree >= {l}"));
            if let Some(k) = k {
                let bound = cover_cost_bound(g, &CostVector::unit(g.m()), *k, *l).map_err(solver)?;
                r.rational("bound", &bound.value).text("bound_case", format!("{:?}", bound.case));
                let size = int(cover.len() as i128);
                r.check("bound", size <= bound.value, format!("{} <= {}", cover.len(), bound.value));
            }
        }
        Command::CoverCost { l, k, max_enum, .. } => {
            r = RunReport::new("cover-cost");
            let c = costs();
            let spec = CoverSpec::for_graph(g, *l).map_err(solver)?;
            let opts = CoverOptions { max_bnb_edges: *max_enum };
            let cover = min_cost_edge_cover_with(g, &c, spec, opts).map_err(solver)?;
            let cost = c.cost_of(&cover);
            r.rational("cost", &cost).int("size", cover.len()).set("edges", &cover);
            r.check("cover", is_edge_cover(g, &cover, spec), format!("min degree >= {l}"));
            if let Some(k) = k {
                let bound = cover_cost_bound(g, &c, *k, *l).map_err(solver)?;
                r.rational("bound", &bound.value)
                    .rational("relaxed_bound", &bound.relaxed_value)
                    .text("bound_case", format!("{:?}", bound.case));
                r.check("bound", cost <= bound.value, format!("{cost} <= {}", bound.value));
            }
        }
        Command::Kcs { k, opt, max_enum, .. } => {
            r = RunReport::new("kcs");
            let mut sol = algorithm1(g, *k, inst.costs.as_ref()).map_err(solver)?;
            describe_solution(&mut r, g, &sol);
            if *opt {
                match &inst.costs {
                    Some(c) if !c.is_uniform() => {
                        let (best, _) = brute_opt_kcs_cost(g, *k, c, *max_enum).map_err(solver)?;
                        let cost = sol.total_cost.expect("weighted run");
                        r.rational("opt_cost", &best).rational("ratio", &(cost / best));
                    }
                    _ => {
                        let (best, _) = brute_opt_kcs_capped(g, *k, *max_enum).map_err(solver)?;
                        let within = sol.certify(int(best as i128), g.is_directed(), g.n());
                        let cert = &sol.certificates;
                        r.int("opt", best)
                            .rational("additive_bound", cert.additive_bound.as_ref().unwrap())
                            .rational("multiplicative_bound", cert.multiplicative_bound.as_ref().unwrap());
                        r.check("ratio", within, format!("{} edges against opt {best}", sol.total_size));
                    }
                }
            }
        }
        Command::KcsRelaxed { k, opt, max_enum, .. } => {
            r = RunReport::new("kcs-relaxed");
            let sol = kcs_relaxed(g, *k).map_err(solver)?;
            describe_solution(&mut r, g, &sol);
            if *opt {
                let (best, _) = brute_opt_kcs_capped(g, *k, *max_enum).map_err(solver)?;
                r.int("opt", best);
                r.check("size", sol.total_size <= best, format!("{} <= opt({k}) = {best}", sol.total_size));
            }
        }
        Command::MaxConn { m, opt, max_enum, .. } => {
            r = RunReport::new("max-conn");
            let sol = max_connectivity_m_edge_subgraph(g, *m).map_err(solver)?;
            r.int("k_achieved", sol.k_achieved).int("edges_used", sol.m_used).set("edges", &sol.edges);
            r.check(
                "connectivity",
                is_k_connected_on(g, &sol.edges, sol.k_achieved),
                format!("{}-connected", sol.k_achieved),
            );
            if *opt {
                let best = brute_max_conn_m_edges_capped(g, *m, *max_enum).map_err(solver)?;
                r.int("k_star", best);
                r.check("guarantee", sol.k_achieved + 1 >= best, format!("{} >= {best} - 1", sol.k_achieved));
            }
        }
        Command::Conn { .. } => {
            r = RunReport::new("conn");
            let lambda = edge_connectivity(g).map_err(solver)?;
            let kappa = node_connectivity(g).map_err(solver)?;
            r.int("edge_connectivity", lambda.value);
            if let Witness::EdgeCut { side, edges } = &lambda.witness {
                r.nodes("cut_side", &side.nodes()).set("cut_edges", edges);
            }
            r.int("node_connectivity", kappa.value);
            match &kappa.witness {
                Witness::Separator(nodes) => {
                    r.nodes("separator", nodes);
                }
                Witness::Complete => {
                    r.text("separator", "none (all pairs adjacent)");
                }
                Witness::EdgeCut { .. } => {}
            }
        }
        Command::VerifyScaling {
            k,
            l,
            x,
            seed,
            exhaustive,
            max_enum,
            ..
        } => {
            r = RunReport::new("verify-scaling");
            let point = match x {
                PointSource::Ones => FracVector::ones(g.m()),
                PointSource::Perturbed => perturbed_feasible_point(g, *k, *seed).map_err(solver)?,
                PointSource::Costs => {
                    let c = inst
                        .costs
                        .as_ref()
                        .ok_or_else(|| CliError::Usage(format!("{}: --x costs needs a cost column", inst.name)))?;
                    FracVector::for_graph(g, c.as_slice().to_vec()).map_err(solver)?
                }
            };
            let opts = EnumerationOptions {
                mode: if *exhaustive { FamilyMode::Exhaustive } else { FamilyMode::Dominant },
                max_nodes: *max_enum,
                ..EnumerationOptions::default()
            };
            let rep = verify_scaling(g, &point, *k, *l, &opts).map_err(solver)?;
            r.rational("mu", &rep.scale.mu)
                .text("case", format!("{:?}", rep.scale.case))
                .rational("relaxed_factor", &rep.relaxed_factor)
                .rational("x_total", &point.total());
            membership(&mut r, "scaled", &rep.scaled);
            membership(&mut r, "relaxed", &rep.relaxed);
            r.check("factor_comparison", rep.factor_comparison_ok, "odd-case factor <= relaxed factor");
        }
        Command::Oracle { kind } => match kind {
            OracleKind::Cover { l, .. } => {
                r = RunReport::new("oracle cover");
                let spec = CoverSpec::for_graph(g, *l).map_err(solver)?;
                let (cost, set) = brute_min_cost_edge_cover(g, &costs(), spec).map_err(solver)?;
                r.rational("cost", &cost).set("edges", &set);
            }
            OracleKind::Kcs { k, max_enum, .. } => {
                r = RunReport::new("oracle kcs");
                match &inst.costs {
                    Some(c) => {
                        let (cost, set) = brute_opt_kcs_cost(g, *k, c, *max_enum).map_err(solver)?;
                        r.rational("cost", &cost).int("size", set.len()).set("edges", &set);
                    }
                    None => {
                        let (size, set) = brute_opt_kcs_capped(g, *k, *max_enum).map_err(solver)?;
                        r.int("size", size).set("edges", &set);
                    }
                }
            }
            OracleKind::MaxConn { m, max_enum, .. } => {
                r = RunReport::new("oracle max-conn");
                let best = brute_max_conn_m_edges_capped(g, *m, *max_enum).map_err(solver)?;
                r.int("k_star", best);
            }
        },
        Command::Gen { .. } => return Err(CliError::Usage("gen takes no input files".into())),
    }
    r.instance = Some(inst.name.clone());
    r.digest = Some(inst.digest.clone());
    r.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(r)
}

fn describe_solution(r: &mut RunReport, g: &MultiGraph, sol: &KcsSolution) {
    r.int("k", sol.k)
        .int("cover_size", sol.cover.len())
        .int("augmentation_size", sol.augmentation.len())
        .int("total", sol.total_size);
    if let Some(c) = &sol.total_cost {
        r.rational("total_cost", c);
    }
    r.rational("lower_bound", &sol.lower_bound)
        .set("cover", &sol.cover)
        .set("augmentation", &sol.augmentation);
    let limit = sol.certificates.forest_limit;
    r.check(
        "forest",
        sol.certificates.forest_ok && sol.augmentation.len() <= limit,
        format!("augmentation acyclic, {} <= {limit} edges", sol.augmentation.len()),
    );
    r.check(
        "connectivity",
        is_k_connected_on(g, &sol.edges(), sol.k),
        format!("{}-connected", sol.k),
    );
}

fn membership(r: &mut RunReport, name: &str, v: &MembershipVerdict) {
    r.int(&format!("{name}_tight"), v.tight_count);
    let detail = match &v.violation {
        None => format!("{} constraints hold", v.constraints_checked),
        Some(c) => format!(
            "violated at S = {:?}, F = {:?}: {} < {}",
            c.side.nodes(),
            c.removed.ids(),
            to_pq(&c.lhs),
            to_pq(&c.rhs)
        ),
    };
    r.check(name, v.ok, detail);
}

fn generate(kind: &GenKind) -> Result<String, CliError> {
    let solver = |source| CliError::Solver {
        path: "gen".into(),
        source,
    };
    let text = match kind {
        GenKind::Harary { k, n } => serialize_graph(&harary(*k, *n).map_err(solver)?, None),
        GenKind::Random { n, k, extra, seed, costs } => {
            let g = random_k_edge_connected(*n, *k, *extra, *seed).map_err(solver)?;
            let c = costs.then(|| random_costs(g.m(), *seed));
            serialize_graph(&g, c.as_ref())
        }
        GenKind::Beta { n, beta, seed } => {
            let beta = rational::parse(beta).ok_or_else(|| CliError::Usage(format!("bad rational {beta:?}")))?;
            let inst = beta_metric_instance(*n, beta, *seed).map_err(solver)?;
            serialize_graph(&inst.graph, Some(&inst.costs))
        }
        GenKind::Digraph { n, k, extra, seed } => {
            serialize_graph(&random_k_connected_digraph(*n, *k, *extra, *seed).map_err(solver)?, None)
        }
    };
    Ok(text)
}
