//! Plain edge-list format: a header line `n m`, then `m` lines `u v`.
//! Repeated lines are parallel edges. Blank lines are ignored.

use super::{Graph, GraphError};
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty input, expected an `n m` header")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, found {found:?}")]
    Malformed { line: usize, found: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} outside 0..{n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), EdgeListError> {
    let malformed = || EdgeListError::Malformed {
        line: line_no,
        found: line.to_string(),
    };
    let mut fields = line.split_whitespace();
    let a = fields.next().ok_or_else(malformed)?;
    let b = fields.next().ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::OutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::Loop { line, vertex: u });
        }
        edges.push((u, v));
        line_of.push(line);
    }
    if edges.len() != m {
        return Err(EdgeListError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges).map_err(|e| match e {
        GraphError::Loop { index, vertex } => EdgeListError::Loop {
            line: line_of[index],
            vertex,
        },
        GraphError::VertexOutOfRange { index, vertex, n } => EdgeListError::OutOfRange {
            line: line_of[index],
            vertex,
            n,
        },
    })
}

/// Writes `g` in edge-list form, edges in id order, LF-terminated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
