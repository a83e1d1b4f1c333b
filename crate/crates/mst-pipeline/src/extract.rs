use clique_runtime::CliqueRuntime;
use graph_core::{DisjointSets, NodeId, Partition};

use crate::error::PipelineError;
use crate::instances::NestedInstances;

/// Pulls the spanning-forest edges out of the solved instance chain. The
/// designated node of weight group i holds that group's edges plus the
/// labels of instance i−1; an edge joins the forest exactly when its
/// endpoints are still separated by everything lighter, which is Kruskal's
/// rule evaluated group-locally. Three routed rounds: group edges in,
/// previous labels in, chosen edges out.
pub fn extract_mst(
    rt: &mut CliqueRuntime,
    inst: &NestedInstances,
    parts: &[Partition],
) -> Result<Vec<(NodeId, NodeId, u64)>, PipelineError> {
    let n = inst.n;
    let m = inst.m;
    assert_eq!(parts.len(), m, "one solved partition per instance");

    rt.set_phase("extract");
    let designated = |i: usize| (i % n) as u32;
    let cap = rt.load_limit();
    let mut edges_in = vec![0u64; n];
    let mut edges_recv = vec![0u64; n];
    let mut labels_in = vec![0u64; n];
    let mut labels_recv = vec![0u64; n];
    for i in 0..m {
        let group = inst.group_range(i);
        if group.len() as u64 > cap {
            return Err(PipelineError::GroupTooLarge { size: group.len() as u64, cap });
        }
        for &(u, v, _) in &inst.edges[group] {
            edges_in[u.max(v) as usize] += 1;
            edges_recv[designated(i) as usize] += 1;
        }
        for v in 0..n {
            labels_in[v] += 1;
            labels_recv[designated(i) as usize] += 1;
        }
    }
    rt.lenzen_route_loads(&edges_in, &edges_recv)?;
    rt.lenzen_route_loads(&labels_in, &labels_recv)?;

    let mut chosen = Vec::with_capacity(n);
    let mut result_out = vec![0u64; n];
    for i in 0..m {
        let mut dsu = DisjointSets::new(n);
        if i > 0 {
            for v in 0..n as u32 {
                dsu.union(v, parts[i - 1].label(v));
            }
        }
        for &(u, v, w) in &inst.edges[inst.group_range(i)] {
            if dsu.union(u, v) {
                chosen.push((u, v, w));
                result_out[designated(i) as usize] += 1;
            }
        }
    }
    let mut result_recv = vec![0u64; n];
    result_recv[0] = result_out.iter().sum();
    rt.lenzen_route_loads(&result_out, &result_recv)?;

    assert_eq!(
        chosen.len(),
        n - parts[m - 1].component_count(),
        "forest size must match the final component count"
    );
    Ok(chosen)
}
