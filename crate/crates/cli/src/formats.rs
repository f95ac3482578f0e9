//! Plain-text graph and Cayley spec files.
//!
//! Graph files are DIMACS-flavoured with 1-indexed vertices:
//!
//! ```text
//! c optional comment
//! p 3 2
//! e 1 2
//! e 2 3
//! l 1 first-vertex-label
//! ```
//!
//! Spec files hold `dim <d>` followed by one generator bitstring per line,
//! leftmost character first coordinate.

use std::fmt::Write as _;

use cayhom_core::families::{CayleySpec, Z2Vector};
use cayhom_core::Graph;

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} {tok:?}")))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "l {} {}", v + 1, l).unwrap();
        }
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut toks = trimmed.splitn(3, char::is_whitespace);
        let kind = toks.next().unwrap_or_default();
        if kind != "p" && header.is_none() {
            return Err(err(line, "expected `p <n> <m>` before other lines"));
        }
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate `p` line"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let rest = toks.next().unwrap_or_default();
                let m = number(rest.split_whitespace().next(), line, "edge count")?;
                header = Some((n, m));
                labels = vec![None; n];
            }
            "e" => {
                let n = header.map_or(0, |h| h.0);
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next().and_then(|r| r.split_whitespace().next()), line, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(line, format!("endpoint outside 1..={n}")));
                }
                if u == v {
                    return Err(err(line, format!("loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            "l" => {
                let v = number(toks.next(), line, "vertex")?;
                if v == 0 || v > labels.len() {
                    return Err(err(line, format!("label for missing vertex {v}")));
                }
                labels[v - 1] = Some(toks.next().unwrap_or_default().to_string());
            }
            other => return Err(err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(0, "missing `p <n> <m>` line"))?;
    if edges.len() != m {
        return Err(err(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))?;
    if g.edge_count() != m {
        return Err(err(0, "duplicate edges"));
    }
    if labels.iter().all(Option::is_none) {
        return Ok(g);
    }
    let labels: Option<Vec<String>> = labels.into_iter().collect();
    let labels = labels.ok_or_else(|| err(0, "labels must cover every vertex"))?;
    g.with_labels(labels).map_err(|e| err(0, e.to_string()))
}

pub fn parse_spec(text: &str) -> Result<CayleySpec, ParseError> {
    let mut dim: Option<u32> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') || t == "c" || t.starts_with("c ") {
            continue;
        }
        match dim {
            None => {
                let d = t
                    .strip_prefix("dim")
                    .ok_or_else(|| err(line, "expected `dim <d>`"))?
                    .trim();
                dim = Some(d.parse().map_err(|_| err(line, format!("bad dimension {d:?}")))?);
            }
            Some(d) => {
                let v = Z2Vector::parse(t).map_err(|e| err(line, e.to_string()))?;
                if v.dim() != d {
                    return Err(err(line, format!("generator has {} coordinates, expected {d}", v.dim())));
                }
                gens.push(v);
            }
        }
    }
    let dim = dim.ok_or_else(|| err(0, "missing `dim <d>` line"))?;
    CayleySpec::new(dim, gens).map_err(|e| err(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cayhom_core::families::projective_cube;

    #[test]
    fn graph_round_trip() {
        let g = projective_cube(3).unwrap();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_graph("c hi\np 3 2\ne 1 2\nc mid\ne 2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(parse_graph("p 2 1\ne 1 3\n").is_err());
        assert!(parse_graph("p 2 1\ne 1 1\n").is_err());
        assert!(parse_graph("p 2 2\ne 1 2\n").is_err());
        assert!(parse_graph("e 1 2\n").is_err());
        assert!(parse_graph("p 2 0\nl 1 a\n").is_err());
        assert!(parse_graph("p 2 0\nx\n").is_err());
    }

    #[test]
    fn spec_parsing() {
        let spec = parse_spec("c pc3\ndim 3\n100\n010\n001\n\n111\n").unwrap();
        assert_eq!(spec, CayleySpec::projective_cube(3).unwrap());
        assert!(parse_spec("dim 2\n00\n").is_err());
        assert!(parse_spec("dim 2\n10\n10\n").is_err());
        assert!(parse_spec("dim 2\n101\n").is_err());
    }
}
