//! Plain edge lists: a header line `n m` followed by `m` lines `u v`.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Graph, MAX_VERTICES};
use crate::error::{EdgeListError, Error, Result};

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// Parses the edge-list format. Blank lines are ignored; errors carry the
/// 1-based line number they occurred on.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::edge_list(1, EdgeListError::MissingHeader))?;
    let (n, m) = two_numbers(header).ok_or(Error::edge_list(header_line, EdgeListError::Malformed))?;
    if n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        let (u, v) = two_numbers(body).ok_or(Error::edge_list(line, EdgeListError::Malformed))?;
        if let Some(vertex) = [u, v].into_iter().find(|&w| w >= n) {
            return Err(Error::edge_list(line, EdgeListError::OutOfRange { vertex, n }));
        }
        if u == v {
            return Err(Error::edge_list(line, EdgeListError::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::edge_list(line, EdgeListError::DuplicateEdge(u, v)));
        }
        if seen.len() > m {
            return Err(Error::edge_list(line, EdgeListError::EdgeCount { expected: m, found: seen.len() }));
        }
    }
    if seen.len() != m {
        return Err(Error::edge_list(last_line, EdgeListError::EdgeCount { expected: m, found: seen.len() }));
    }
    Graph::from_edges(n, seen)
}

/// Writes `g` as an edge list with edges `u < v` in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
