//! Edge-list text: a line `n m`, then `m` lines `u v` (0-based).
//! Several graphs may follow each other; blank lines and `#` comments are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parse exactly one graph.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = EdgeListReader::new(text);
    let g = graphs.next().ok_or(Error::EdgeList { line: 1, reason: "no graph found".into() })??;
    if let Some(extra) = graphs.next() {
        let line = match extra {
            Err(Error::EdgeList { line, .. }) => line,
            _ => graphs.line,
        };
        return Err(Error::EdgeList { line, reason: "trailing data after the first graph".into() });
    }
    Ok(g)
}

/// Iterator over consecutive edge-list graphs in a text.
pub struct EdgeListReader<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    line: usize,
    failed: bool,
}

impl<'a> EdgeListReader<'a> {
    pub fn new(text: &'a str) -> Self {
        EdgeListReader { lines: text.lines().enumerate(), line: 0, failed: false }
    }

    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.lines.by_ref() {
            self.line = i + 1;
            let s = raw.split('#').next().unwrap_or("").trim();
            if !s.is_empty() {
                return Some((i + 1, s));
            }
        }
        None
    }

    fn pair(line: usize, s: &str) -> Result<(usize, usize)> {
        let bad = |reason: &str| Error::EdgeList { line, reason: reason.to_string() };
        let mut it = s.split_whitespace();
        let a = it.next().ok_or_else(|| bad("expected two integers"))?;
        let b = it.next().ok_or_else(|| bad("expected two integers"))?;
        if it.next().is_some() {
            return Err(bad("expected exactly two integers"));
        }
        let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
        let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
        Ok((a, b))
    }

    fn read_graph(&mut self, header_line: usize, header: &str) -> Result<Graph> {
        let (n, m) = Self::pair(header_line, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, s) = self.next_content().ok_or(Error::EdgeList {
                line: self.line + 1,
                reason: format!("expected {m} edges, found {}", edges.len()),
            })?;
            let e = Self::pair(line, s)?;
            let bad = |reason: String| Error::EdgeList { line, reason };
            if e.0 >= n || e.1 >= n {
                return Err(bad(format!("vertex {} out of range for {n} vertices", e.0.max(e.1))));
            }
            if e.0 == e.1 {
                return Err(bad(format!("self-loop at vertex {}", e.0)));
            }
            if edges.iter().any(|&(a, b)| (a, b) == e || (b, a) == e) {
                return Err(bad(format!("duplicate edge {}-{}", e.0, e.1)));
            }
            edges.push(e);
        }
        Graph::from_edges(n, &edges).map_err(|e| Error::EdgeList { line: header_line, reason: e.to_string() })
    }
}

impl Iterator for EdgeListReader<'_> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.failed {
            return None;
        }
        let (line, header) = self.next_content()?;
        let r = self.read_graph(line, header);
        self.failed = r.is_err();
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_batches() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let text = to_edge_list(&c5);
        assert!(text.starts_with("5 5\n0 1\n0 4\n"));
        assert_eq!(from_edge_list(&text).unwrap(), c5);
        let two = format!("# two graphs\n{text}\n3 0\n");
        let graphs: Vec<_> = EdgeListReader::new(&two).collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1], Graph::empty(3).unwrap());
        assert!(from_edge_list(&two).is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(from_edge_list("3 2\n0 1\n0 x\n").unwrap_err(), Error::EdgeList { line: 3, reason: "not a non-negative integer".into() });
        assert!(matches!(from_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(from_edge_list("3 2\n0 1\n1 0\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(from_edge_list("3 1\n0 3\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(from_edge_list("3 1\n1 1\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(from_edge_list(""), Err(Error::EdgeList { line: 1, .. })));
    }
}
