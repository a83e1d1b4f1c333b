//! Degree reduction by two-stage highest-degree edge selection. Splits the
//! input into `g_a` (a few large "awake" components, solved elsewhere by
//! sketching) and `g_b` (everything else, with degree below the threshold).

use std::collections::BTreeSet;

use clique_runtime::{CliqueRuntime, RuntimeError};
use graph_core::{complete_partition, Graph, NodeId, Partition};

/// Component label plus the maximum node degree over its members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentInfo {
    pub id: NodeId,
    pub degree: u32,
}

#[derive(Debug, Clone)]
pub struct SparsifyResult {
    /// Edges with both endpoints awake.
    pub g_a: Graph,
    /// Partition after both selection stages; active labels are the awake
    /// components.
    pub c_a: Partition,
    /// Remaining edges; max degree < s.
    pub g_b: Graph,
    pub s: u32,
}

impl SparsifyResult {
    pub fn awake_labels(&self) -> &BTreeSet<NodeId> {
        self.c_a.active_labels()
    }

    pub fn is_awake(&self, v: NodeId) -> bool {
        self.c_a.is_active(self.c_a.label(v))
    }
}

/// Stage 1: pick the incident edge toward the neighbor maximizing
/// (degree, id). Isolated nodes select nothing.
pub fn stage1_select(v: NodeId, neighbor_degrees: &[(NodeId, u32)]) -> Option<(NodeId, NodeId)> {
    neighbor_degrees
        .iter()
        .max_by_key(|&&(u, d)| (d, u))
        .map(|&(u, _)| (u, v))
}

/// Stage 2: pick an edge into the highest-degree component incident to `v`
/// other than `v`'s own; ties go to the larger component id. `None` when
/// every neighbor shares `v`'s component.
pub fn stage2_select(
    v: NodeId,
    own: ComponentInfo,
    neighbor_info: &[(NodeId, ComponentInfo)],
) -> Option<(NodeId, NodeId)> {
    neighbor_info
        .iter()
        .filter(|&&(_, info)| info.id != own.id)
        .max_by_key(|&&(u, info)| (info.degree, info.id, u))
        .map(|&(u, _)| (u, v))
}

/// The two selection stages as pure local computation: the chosen edges
/// plus the finished split.
pub fn reduce_degree_local(g: &Graph, s: u32) -> SparsifyResult {
    let (_, _, result) = reduce_degree_plan(g, s);
    result
}

/// Like `reduce_degree_local`, but also exposes the per-stage edge picks
/// (which drive the communication accounting).
pub fn reduce_degree_plan(
    g: &Graph,
    s: u32,
) -> (Vec<(NodeId, NodeId)>, Vec<(NodeId, NodeId)>, SparsifyResult) {
    assert!(s >= 1, "threshold must be positive");
    let n = g.n();

    let stage1: Vec<(NodeId, NodeId)> = (0..n as u32)
        .filter_map(|v| {
            let degs: Vec<(NodeId, u32)> =
                g.neighbors(v).iter().map(|&u| (u, g.degree(u) as u32)).collect();
            stage1_select(v, &degs)
        })
        .collect();

    let mid = complete_partition(n, &stage1);
    let info = component_info(g, &mid);

    let stage2: Vec<(NodeId, NodeId)> = (0..n as u32)
        .filter_map(|v| {
            let neigh: Vec<(NodeId, ComponentInfo)> = g
                .neighbors(v)
                .iter()
                .map(|&u| (u, info[u as usize]))
                .collect();
            stage2_select(v, info[v as usize], &neigh)
        })
        .collect();

    // Final components are the union-find closure over both stages' edges.
    let all_picked: Vec<(NodeId, NodeId)> = stage1.iter().chain(stage2.iter()).copied().collect();
    let mut c_a = complete_partition(n, &all_picked);
    let fin = component_info(g, &c_a);
    for v in 0..n as u32 {
        let awake = fin[v as usize].degree >= s;
        c_a.set_active(c_a.label(v), awake);
    }

    let mut e_a = Vec::new();
    let mut e_b = Vec::new();
    for (u, v) in g.edges() {
        let both_awake =
            c_a.is_active(c_a.label(u)) && c_a.is_active(c_a.label(v));
        if both_awake {
            e_a.push((u, v));
        } else {
            e_b.push((u, v));
        }
    }
    let g_a = Graph::build(n, &e_a).expect("subset of a valid edge set");
    let g_b = Graph::build(n, &e_b).expect("subset of a valid edge set");

    let awake_count = c_a.active_count();
    assert!(
        awake_count as u64 * s as u64 <= n as u64,
        "awake component count {awake_count} exceeds n/s"
    );
    for &label in c_a.active_labels() {
        assert!(c_a.component_size(label) > s as usize, "awake component too small");
    }
    assert!(g_b.max_degree() < s as usize, "g_b degree must stay below s");
    assert_eq!(g_a.edge_count() + g_b.edge_count(), g.edge_count());

    (stage1, stage2, SparsifyResult { g_a, c_a, g_b, s })
}

/// Runs both selection stages on the runtime and splits the edge set.
/// Guarantees, asserted on every run: at most n/s awake components, each of
/// size at least s+1, and max degree of `g_b` below s.
///
/// Schedule: degree announcement, stage-1 picks routed to the coordinator,
/// stage-1 labels out and rebroadcast, stage-2 picks routed, final labels
/// out and rebroadcast.
pub fn reduce_degree(
    rt: &mut CliqueRuntime,
    g: &Graph,
    s: u32,
) -> Result<SparsifyResult, RuntimeError> {
    let n = g.n();
    assert_eq!(rt.n(), n, "runtime sized for the input graph");
    let coord: u32 = 0;
    let (stage1, stage2, result) = reduce_degree_plan(g, s);

    rt.set_phase("sparsify");
    rt.broadcast_round(0..n as u32)?;
    rt.lenzen_route_bulk(stage1.iter().map(|&(_, v)| (v, coord, 1u64)))?;
    rt.direct_round_bulk((0..n as u32).map(|v| (coord, v)))?;
    rt.broadcast_round(0..n as u32)?;
    rt.lenzen_route_bulk(stage2.iter().map(|&(_, v)| (v, coord, 1u64)))?;
    rt.direct_round_bulk((0..n as u32).map(|v| (coord, v)))?;
    rt.broadcast_round(0..n as u32)?;

    Ok(result)
}


fn component_info(g: &Graph, p: &Partition) -> Vec<ComponentInfo> {
    let n = g.n();
    let mut max_deg = vec![0u32; n];
    for v in 0..n as u32 {
        let l = p.label(v) as usize;
        max_deg[l] = max_deg[l].max(g.degree(v) as u32);
    }
    (0..n as u32)
        .map(|v| {
            let l = p.label(v);
            ComponentInfo { id: l, degree: max_deg[l as usize] }
        })
        .collect()
}
