use clique_runtime::{CliqueRuntime, RuntimeConfig};
use graph_core::{Graph, NodeId};

use crate::cc::connected_components;
use crate::error::PipelineError;

/// Same-component test via the component pipeline.
pub fn st_connected(g: &Graph, s: NodeId, t: NodeId, seed: u64) -> Result<bool, PipelineError> {
    let n = g.n() as u32;
    if s >= n || t >= n {
        return Err(PipelineError::InvalidInput(format!("endpoint out of range: {s}, {t}")));
    }
    let mut rt = CliqueRuntime::new(g.n(), RuntimeConfig::default());
    let p = connected_components(&mut rt, g, seed)?;
    Ok(p.label(s) == p.label(t))
}

/// A graph is bipartite exactly when its double cover (each edge (u,v)
/// lifted to (u, v') and (u', v)) splits every component in two — i.e. the
/// cover has twice as many components.
pub fn is_bipartite(g: &Graph, seed: u64) -> Result<bool, PipelineError> {
    let n = g.n();
    let lifted: Vec<(NodeId, NodeId)> = g
        .edges()
        .flat_map(|(u, v)| [(u, v + n as u32), (u + n as u32, v)])
        .collect();
    let cover = Graph::build(2 * n, &lifted).expect("double cover of a valid graph");

    let mut rt = CliqueRuntime::new(n, RuntimeConfig::default());
    let base = connected_components(&mut rt, g, seed)?;
    let mut rt2 = CliqueRuntime::new(2 * n, RuntimeConfig::default());
    let top = connected_components(&mut rt2, &cover, seed ^ 0x2c0f)?;
    Ok(top.component_count() == 2 * base.component_count())
}

/// True when no edge crosses between `cut` and its complement: every node
/// checks its incident edges and one gather round combines the verdicts.
pub fn verify_cut(g: &Graph, cut: &[NodeId]) -> Result<bool, PipelineError> {
    let n = g.n();
    if cut.is_empty() || cut.len() >= n {
        return Err(PipelineError::InvalidInput(
            "cut must be a nonempty proper subset".into(),
        ));
    }
    let mut inside = vec![false; n];
    for &v in cut {
        if v >= n as u32 {
            return Err(PipelineError::InvalidInput(format!("cut node {v} out of range")));
        }
        inside[v as usize] = true;
    }
    let mut rt = CliqueRuntime::new(n, RuntimeConfig::default());
    rt.set_phase("verify");
    rt.broadcast_round(0..n as u32)?;
    rt.lenzen_route_bulk((0..n as u32).map(|v| (v, 0, 1u64)))?;
    Ok(g.edges().all(|(u, v)| inside[u as usize] == inside[v as usize]))
}

/// True when some component carries at least as many edges as nodes.
pub fn contains_cycle(g: &Graph, seed: u64) -> Result<bool, PipelineError> {
    let n = g.n();
    let mut rt = CliqueRuntime::new(n, RuntimeConfig::default());
    let p = connected_components(&mut rt, g, seed)?;
    rt.set_phase("verify");
    rt.lenzen_route_bulk((0..n as u32).map(|v| (v, 0, 1u64)))?;
    let mut nodes = std::collections::BTreeMap::new();
    let mut edges = std::collections::BTreeMap::new();
    for v in 0..n as u32 {
        *nodes.entry(p.label(v)).or_insert(0usize) += 1;
    }
    for (u, _) in g.edges() {
        *edges.entry(p.label(u)).or_insert(0usize) += 1;
    }
    Ok(edges.iter().any(|(l, &e)| e >= nodes[l]))
}
