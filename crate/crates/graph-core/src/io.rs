use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::{Graph, NodeId, WeightedGraph};

/// Parses the text format: first line `n m`, then `m` lines `u v`, 0-based.
pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let (n, edges) = parse_lines(text, false)?;
    Graph::build(n, &edges.into_iter().map(|(u, v, _)| (u, v)).collect::<Vec<_>>())
}

/// Parses the weighted format: first line `n m`, then `m` lines `u v w`.
pub fn parse_weighted_graph_text(text: &str) -> Result<WeightedGraph, GraphError> {
    let (n, edges) = parse_lines(text, true)?;
    WeightedGraph::build(n, &edges)
}

fn parse_lines(text: &str, weighted: bool) -> Result<(usize, Vec<(NodeId, NodeId, u64)>), GraphError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| GraphError::Parse("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("bad node count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("bad edge count".into()))?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        if i >= m {
            return Err(GraphError::Parse(format!("more than {m} edge lines")));
        }
        let mut t = line.split_whitespace();
        let u: NodeId = t
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad edge line {i}")))?;
        let v: NodeId = t
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad edge line {i}")))?;
        let w: u64 = if weighted {
            t.next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("missing weight on line {i}")))?
        } else {
            0
        };
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(GraphError::Parse(format!("expected {m} edges, got {}", edges.len())));
    }
    Ok((n, edges))
}

pub fn write_graph_text(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_weighted_graph_text(g: &WeightedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v, w) in g.edges() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}
