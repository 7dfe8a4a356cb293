//! Edge-list and orientation text formats.
//!
//! Edge list: optional `#` comment lines, a first data line `n m`, then `m`
//! lines `u v` with 1-based vertex ids. Orientation: one `tail head` line per
//! edge, in any order.

use super::{Graph, GraphError, OrientedGraph, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str, what: &str) -> Result<(usize, usize)> {
    let err = || GraphError::Parse { line, message: format!("expected {what}, found `{s}`") };
    let mut it = s.split_whitespace();
    let a = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    let b = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (line, header) = lines
        .next()
        .ok_or(GraphError::Parse { line: 1, message: "expected header `n m`".into() })?;
    let (n, m) = parse_pair(line, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    let mut last = line;
    for (line, l) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line,
                message: format!("expected {m} edge lines, found more"),
            });
        }
        edges.push(parse_pair(line, l, "edge `u v`")?);
        edge_lines.push(line);
        last = line;
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: last,
            message: format!("expected {m} edge lines, found {}", edges.len()),
        });
    }
    Graph::new(n, edges).map_err(|e| {
        let line = match e {
            GraphError::Loop { edge, .. }
            | GraphError::Duplicate { edge, .. }
            | GraphError::OutOfRange { edge, .. } => edge_lines[edge],
            _ => line,
        };
        GraphError::Parse { line, message: e.to_string() }
    })
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `tail head` lines and matches each to an edge of `g`.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<OrientedGraph> {
    let mut arcs = Vec::new();
    let mut line_of = Vec::new();
    for (line, l) in data_lines(text) {
        arcs.push(parse_pair(line, l, "arc `tail head`")?);
        line_of.push(line);
    }
    OrientedGraph::from_arcs(g, &arcs).map_err(|e| match e {
        GraphError::Parse { line, message } => GraphError::Parse {
            line: line_of.get(line.saturating_sub(1)).copied().unwrap_or(line),
            message,
        },
        other => other,
    })
}

pub fn format_orientation(d: &OrientedGraph) -> String {
    d.arcs().iter().map(|(t, h)| format!("{t} {h}\n")).collect()
}
