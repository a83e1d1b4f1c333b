use clique_runtime::CliqueRuntime;
use graph_core::{Graph, NodeId, WeightedGraph};

use crate::error::PipelineError;

/// A chain of edge sets E_1 ⊆ E_2 ⊆ … ⊆ E_m: edges sorted by weight and cut
/// into m consecutive groups; instance i owns the first i+1 groups. Encoded
/// as the sorted edge list plus a group index per edge, which is also what
/// each node ends up knowing about its incident edges.
#[derive(Debug, Clone)]
pub struct NestedInstances {
    pub n: usize,
    pub m: usize,
    /// Ascending by (weight, endpoint pair); ties impossible after ranking.
    pub edges: Vec<(NodeId, NodeId, u64)>,
    pub group_size: usize,
}

impl NestedInstances {
    /// Group (first-instance index) of the sorted edge at `idx`.
    pub fn group_of(&self, idx: usize) -> usize {
        (idx / self.group_size).min(self.m - 1)
    }

    /// The sorted-edge index range making up group `i`.
    pub fn group_range(&self, i: usize) -> std::ops::Range<usize> {
        let lo = (i * self.group_size).min(self.edges.len());
        let hi = if i + 1 == self.m {
            self.edges.len()
        } else {
            ((i + 1) * self.group_size).min(self.edges.len())
        };
        lo..hi
    }

    /// Number of edges in E_i (groups 0..=i).
    pub fn prefix_len(&self, i: usize) -> usize {
        self.group_range(i).end
    }

    /// The unweighted graph of instance `i`.
    pub fn instance_graph(&self, i: usize) -> Graph {
        let edges: Vec<(NodeId, NodeId)> =
            self.edges[..self.prefix_len(i)].iter().map(|&(u, v, _)| (u, v)).collect();
        Graph::build(self.n, &edges).expect("subset of a valid edge set")
    }

    /// Per-node degrees in the full edge set E_m.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v, _) in &self.edges {
            d[u as usize] += 1;
            d[v as usize] += 1;
        }
        d
    }
}

/// Sorts the edges by weight and splits them into m nested instances; two
/// routed rounds spread the sorted positions so every node knows the first
/// instance of each incident edge.
pub fn threshold_instances(
    rt: &mut CliqueRuntime,
    g: &WeightedGraph,
    m: usize,
) -> Result<NestedInstances, PipelineError> {
    assert!(m >= 1);
    let n = g.n();
    let mut edges: Vec<(NodeId, NodeId, u64)> = g.edges().collect();
    edges.sort_unstable_by_key(|&(u, v, w)| (w, u, v));
    let group_size = ((edges.len() + m - 1) / m).max(1);

    rt.set_phase("threshold");
    let mut load = vec![0u64; n];
    for &(u, v, _) in &edges {
        load[u as usize] += 1;
        load[v as usize] += 1;
    }
    rt.lenzen_route_loads(&load, &load)?;
    rt.lenzen_route_loads(&load, &load)?;

    let out = NestedInstances { n, m, edges, group_size };
    for i in 1..m {
        assert!(out.prefix_len(i - 1) <= out.prefix_len(i), "instances must nest");
    }
    assert_eq!(out.prefix_len(m - 1), out.edges.len());
    Ok(out)
}
