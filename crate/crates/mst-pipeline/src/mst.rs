use std::collections::BTreeMap;

use clique_runtime::{CliqueRuntime, RoundTrace, RuntimeConfig};
use graph_core::{subseed, NodeId, WeightedGraph};
use serde::Serialize;

use crate::error::PipelineError;
use crate::extract::extract_mst;
use crate::instances::threshold_instances;
use crate::kkt::{filter_light, kkt_sample};
use crate::parallel::parallel_cc;
use crate::params::PipelineParams;
use crate::proxy::{assign_proxies, distribute_neighbor_tables};

/// Minimum spanning forest of a graph already within the O(n^{3/2}) edge
/// budget: build the nested instance chain, solve all instances at once
/// behind proxies, and extract the forest group by group.
pub fn mst_bounded(
    rt: &mut CliqueRuntime,
    g: &WeightedGraph,
    params: &PipelineParams,
    seed: u64,
) -> Result<Vec<(NodeId, NodeId, u64)>, PipelineError> {
    let count = g.edge_count() as u64;
    if count > params.edge_cap {
        return Err(PipelineError::TooManyEdges { count, cap: params.edge_cap });
    }
    let inst = threshold_instances(rt, g, params.m)?;
    let map = assign_proxies(rt, &inst.degrees(), params.m, params.proxy_cap)?;
    let _tables = distribute_neighbor_tables(rt, &inst, &map)?;
    let parts = parallel_cc(rt, &inst, &map, params, subseed(seed, 0xcc))?;
    extract_mst(rt, &inst, &parts)
}

/// Exact minimum spanning forest. Weights are made distinct by ranking on
/// (weight, endpoint pair); the sampled subgraph's forest prunes the rest
/// down to a second bounded instance. Round charges are a fixed constant.
pub fn mst(
    rt: &mut CliqueRuntime,
    g: &WeightedGraph,
    params: &PipelineParams,
) -> Result<Vec<(NodeId, NodeId, u64)>, PipelineError> {
    let n = g.n();
    assert_eq!(rt.n(), n);
    let (ranked, originals) = rank_weights(g);

    let g1 = kkt_sample(rt, &ranked, params.q_kkt, params.edge_cap, subseed(params.seed, 0x61))?;
    let f1 = mst_bounded(rt, &g1, params, subseed(params.seed, 0x62))?;
    let g2 = filter_light(rt, &ranked, &f1)?;
    let forest = mst_bounded(rt, &g2, params, subseed(params.seed, 0x63))?;

    Ok(forest
        .into_iter()
        .map(|(u, v, rank)| (u, v, originals[rank as usize - 1]))
        .collect())
}

/// Replaces weights with their 1-based rank under (weight, endpoint pair)
/// ordering, so all weights are distinct and the forest is unique; returns
/// the rank -> original weight table for translating back.
fn rank_weights(g: &WeightedGraph) -> (WeightedGraph, Vec<u64>) {
    let mut edges: Vec<(NodeId, NodeId, u64)> = g.edges().collect();
    edges.sort_unstable_by_key(|&(u, v, w)| (w, u, v));
    let originals: Vec<u64> = edges.iter().map(|&(_, _, w)| w).collect();
    let ranked: Vec<(NodeId, NodeId, u64)> = edges
        .into_iter()
        .enumerate()
        .map(|(i, (u, v, _))| (u, v, i as u64 + 1))
        .collect();
    (WeightedGraph::build(g.n(), &ranked).expect("same structure, new weights"), originals)
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub mst_weight: u64,
    pub edge_count: usize,
    pub rounds: u64,
    pub max_load: u64,
    pub phase_rounds: BTreeMap<String, u64>,
}

impl PipelineReport {
    pub fn from_trace(trace: &RoundTrace, edges: &[(NodeId, NodeId, u64)]) -> PipelineReport {
        PipelineReport {
            mst_weight: edges.iter().map(|&(_, _, w)| w).sum(),
            edge_count: edges.len(),
            rounds: trace.rounds_charged,
            max_load: trace.max_node_round_load,
            phase_rounds: trace
                .per_phase
                .iter()
                .map(|(k, v)| (k.clone(), v.rounds))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Convenience wrapper owning its runtime; returns the forest plus the
/// cost report.
pub fn run_mst(
    g: &WeightedGraph,
    seed: u64,
) -> Result<(Vec<(NodeId, NodeId, u64)>, PipelineReport), PipelineError> {
    let params = PipelineParams::for_n(g.n(), seed);
    let mut rt = CliqueRuntime::new(g.n(), RuntimeConfig::default());
    let forest = mst(&mut rt, g, &params)?;
    let report = PipelineReport::from_trace(&rt.metrics(), &forest);
    Ok((forest, report))
}
