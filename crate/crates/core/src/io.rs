//! Plain-text edge-list and arc-list formats.
//!
//! Both formats share one layout: the first non-comment line holds `n m`,
//! followed by exactly `m` lines `u v` with 0-based vertex ids. Anything after
//! a `#` is a comment and blank lines are ignored. In an arc list each line
//! means the arc `u -> v`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Inputs declaring more vertices than this are rejected before allocating.
pub const MAX_VERTICES: usize = 10_000_000;

/// Vertex count plus arcs as read from an arc-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?;
        tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what} {tok:?}") })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse { line, msg: format!("unexpected token {extra:?}") });
    }
    Ok((a, b))
}

type Pairs = (usize, Vec<(usize, usize)>, Vec<usize>);

/// Vertex count and pairs, each pair with its 1-based line number.
fn parse_pairs(text: &str) -> Result<Pairs> {
    let mut header = None;
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let pair = parse_pair(line, body)?;
        match header {
            None => {
                if pair.0 > MAX_VERTICES {
                    return Err(Error::Parse { line, msg: format!("vertex count {} exceeds {MAX_VERTICES}", pair.0) });
                }
                header = Some(pair);
            }
            Some((n, m)) => {
                if pairs.len() == m {
                    return Err(Error::Parse { line, msg: format!("more than the declared {m} lines") });
                }
                for v in [pair.0, pair.1] {
                    if v >= n {
                        return Err(Error::Parse { line, msg: format!("vertex {v} out of range (n = {n})") });
                    }
                }
                pairs.push(pair);
                lines.push(line);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing \"n m\" header".into() })?;
    if pairs.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("declared {m} lines, found {}", pairs.len()) });
    }
    Ok((n, pairs, lines))
}

/// Parses an undirected edge list.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, pairs, lines) = parse_pairs(text)?;
    if let Some(i) = pairs.iter().position(|(u, v)| u == v) {
        return Err(Error::Parse { line: lines[i], msg: format!("self-loop at vertex {}", pairs[i].0) });
    }
    Graph::from_edges(n, pairs)
}

/// Parses an arc list. Arcs are kept in file order; duplicates are kept.
pub fn parse_arc_list(text: &str) -> Result<ArcList> {
    let (n, arcs, _) = parse_pairs(text)?;
    Ok(ArcList { n, arcs })
}

/// Writes `g` as an edge list, with optional leading comment lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_arc_list(n: usize, arcs: &[(usize, usize)], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{n} {}", arcs.len());
    for &(u, v) in arcs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # closing\n\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, msg: "bad second value \"x\"".into() });
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 0, .. }));
        let err = parse_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_edge_list("2 1\n1 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn arc_list_keeps_direction() {
        let a = parse_arc_list("3 2\n2 0\n0 1\n").unwrap();
        assert_eq!(a.arcs, vec![(2, 0), (0, 1)]);
    }

    #[test]
    fn write_then_read() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_edge_list(&g, &["family=cycle n=4".into()]);
        assert!(text.starts_with("# family=cycle n=4\n4 4\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
