//! Plain-text graph files.
//!
//! ```text
//! c optional comment lines
//! p graph <n> <m> <directed: 0|1>
//! e <u> <v> [cost]
//! ```
//!
//! Edge ids follow edge-line order. Costs are `p` or `p/q`; either every
//! edge line has one or none does.

use kcover::cover::CostVector;
use kcover::rational::{self, Rational};
use kcover::MultiGraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn number(line: usize, what: &str, tok: Option<&str>) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("{what} is not a nonnegative integer: {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<(MultiGraph, Option<CostVector>), ParseError> {
    let mut header: Option<(usize, usize, bool, usize)> = None;
    let mut edges = Vec::new();
    let mut costs: Vec<Option<Rational>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second header line"));
                }
                if toks.next() != Some("graph") {
                    return Err(err(line, "header must read `p graph <n> <m> <directed>`"));
                }
                let n = number(line, "node count", toks.next())?;
                let m = number(line, "edge count", toks.next())?;
                let directed = match toks.next() {
                    Some("0") => false,
                    Some("1") => true,
                    other => return Err(err(line, format!("directed flag must be 0 or 1, got {other:?}"))),
                };
                header = Some((n, m, directed, line));
            }
            Some("e") => {
                let Some((n, ..)) = header else {
                    return Err(err(line, "edge line before header"));
                };
                let u = number(line, "tail", toks.next())?;
                let v = number(line, "head", toks.next())?;
                for w in [u, v] {
                    if w >= n {
                        return Err(err(line, format!("endpoint {w} out of range for {n} nodes")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("self-loop at node {u}")));
                }
                let cost = match toks.next() {
                    None => None,
                    Some(t) => {
                        let c = rational::parse(t).ok_or_else(|| err(line, format!("bad cost {t:?}")))?;
                        if c < Rational::from_integer(0) {
                            return Err(err(line, format!("negative cost {t}")));
                        }
                        Some(c)
                    }
                };
                if let Some(first) = costs.first() {
                    if first.is_some() != cost.is_some() {
                        return Err(err(line, "either every edge line has a cost or none does"));
                    }
                }
                edges.push((u, v));
                costs.push(cost);
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(err(line, "trailing tokens"));
        }
    }
    let (n, m, directed, hline) = header.ok_or_else(|| err(text.lines().count().max(1), "missing header"))?;
    if edges.len() != m {
        return Err(err(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    let g = MultiGraph::new(n, directed, edges).map_err(|e| err(hline, e.to_string()))?;
    let costs = match costs.first() {
        Some(Some(_)) => Some(CostVector::new(costs.into_iter().map(Option::unwrap).collect()).map_err(|e| err(hline, e.to_string()))?),
        _ => None,
    };
    Ok((g, costs))
}

/// Human form of a cost: `p` for integers, `p/q` otherwise.
pub fn cost_text(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        rational::to_pq(c)
    }
}

pub fn serialize_graph(g: &MultiGraph, costs: Option<&CostVector>) -> String {
    let mut out = format!("p graph {} {} {}\n", g.n(), g.m(), u8::from(g.is_directed()));
    for (i, &(u, v)) in g.edge_list().iter().enumerate() {
        match costs {
            Some(c) => out.push_str(&format!("e {u} {v} {}\n", cost_text(&c.as_slice()[i]))),
            None => out.push_str(&format!("e {u} {v}\n")),
        }
    }
    out
}

/// Canonical text of a well-formed file: comments and blank lines dropped,
/// single spaces, undirected endpoints ascending, costs in lowest terms.
pub fn normalize(text: &str) -> Result<String, ParseError> {
    let (g, c) = parse_graph(text)?;
    Ok(serialize_graph(&g, c.as_ref()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let (g, c) = parse_graph("p graph 3 3 0\ne 0 1\ne 1 2\ne 2 0\n").unwrap();
        assert_eq!(g, MultiGraph::cycle(3));
        assert!(c.is_none());
        let (g, _) = parse_graph("p graph 2 1 1\ne 0 1\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.edge_list(), &[(0, 1)]);
        let e = parse_graph("p graph 3 1 0\ne 0 5\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn costs_and_errors() {
        let (_, c) = parse_graph("c hi\np graph 3 2 0\ne 0 1 3/6\ne 1 2 2\n").unwrap();
        assert_eq!(c.unwrap().as_slice(), &[Rational::new(1, 2), Rational::from_integer(2)]);
        assert_eq!(parse_graph("p graph 3 2 0\ne 0 1 1\ne 1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("p graph 3 2 0\ne 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("e 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("p graph 3 1 2\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("p graph 3 1 0\ne 1 1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p graph 3 1 0\ne 0 1 -1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p graph 3 1 0\nx\n").unwrap_err().line, 2);
    }

    #[test]
    fn normalize_orders_undirected_endpoints() {
        let t = "c triangle\np  graph 3 3 0\n\ne 2 0 4/2\ne 0 1 1/3\ne 1 2 0\n";
        assert_eq!(normalize(t).unwrap(), "p graph 3 3 0\ne 0 2 2\ne 0 1 1/3\ne 1 2 0\n");
        let d = "p graph 3 1 1\ne 2 0\n";
        assert_eq!(normalize(d).unwrap(), d);
    }
}
