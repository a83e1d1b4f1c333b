use clique_runtime::CliqueRuntime;
use graph_core::{DisjointSets, NodeId, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::PipelineError;

/// Keeps each edge independently with probability `q`. One communication
/// round: every node announces which incident samples it kept.
pub fn kkt_sample(
    rt: &mut CliqueRuntime,
    g: &WeightedGraph,
    q: f64,
    cap: u64,
    seed: u64,
) -> Result<WeightedGraph, PipelineError> {
    rt.set_phase("kkt");
    rt.broadcast_round(0..g.n() as u32)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kept: Vec<(NodeId, NodeId, u64)> = g.edges().filter(|_| rng.gen_bool(q)).collect();
    if kept.len() as u64 > cap {
        return Err(PipelineError::TooManyEdges { count: kept.len() as u64, cap });
    }
    Ok(WeightedGraph::build(g.n(), &kept).expect("subset of a valid edge set"))
}

/// Drops every edge heavier than the heaviest edge on the path between its
/// endpoints in the forest `f`; edges bridging distinct trees (and the
/// forest edges themselves) survive. With distinct weights the survivors
/// carry the same minimum spanning tree as `g`.
pub fn filter_light(
    rt: &mut CliqueRuntime,
    g: &WeightedGraph,
    f: &[(NodeId, NodeId, u64)],
) -> Result<WeightedGraph, PipelineError> {
    let n = g.n();
    let mut dsu = DisjointSets::new(n);
    for &(u, v, w) in f {
        if g.weight(u, v) != Some(w) {
            return Err(PipelineError::InvalidInput(format!(
                "forest edge ({u},{v},{w}) is not an edge of the graph"
            )));
        }
        if !dsu.union(u, v) {
            return Err(PipelineError::InvalidInput("forest contains a cycle".into()));
        }
    }

    // two rounds: forest dissemination, then everyone filters locally and
    // announces survivors
    rt.set_phase("kkt");
    rt.broadcast_round(0..n as u32)?;
    rt.broadcast_round(0..n as u32)?;

    let lift = PathMax::build(n, f);
    let kept: Vec<(NodeId, NodeId, u64)> = g
        .edges()
        .filter(|&(u, v, w)| match lift.path_max(u, v) {
            Some(max) => w <= max,
            None => true,
        })
        .collect();
    Ok(WeightedGraph::build(n, &kept).expect("subset of a valid edge set"))
}

/// Binary-lifting tables answering max-edge-weight path queries on a forest.
struct PathMax {
    comp: Vec<u32>,
    depth: Vec<u32>,
    /// up[k][v] = 2^k-th ancestor; mw[k][v] = max weight on that stretch.
    up: Vec<Vec<u32>>,
    mw: Vec<Vec<u64>>,
}

impl PathMax {
    fn build(n: usize, f: &[(NodeId, NodeId, u64)]) -> PathMax {
        let mut adj: Vec<Vec<(u32, u64)>> = vec![Vec::new(); n];
        for &(u, v, w) in f {
            adj[u as usize].push((v, w));
            adj[v as usize].push((u, w));
        }
        let mut comp = vec![u32::MAX; n];
        let mut depth = vec![0u32; n];
        let mut parent = vec![u32::MAX; n];
        let mut pweight = vec![0u64; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n as u32 {
            if comp[root as usize] != u32::MAX {
                continue;
            }
            comp[root as usize] = root;
            parent[root as usize] = root;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &(v, w) in &adj[u as usize] {
                    if comp[v as usize] == u32::MAX {
                        comp[v as usize] = root;
                        parent[v as usize] = u;
                        pweight[v as usize] = w;
                        depth[v as usize] = depth[u as usize] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        let levels = (usize::BITS - n.max(2).leading_zeros()) as usize;
        let mut up = vec![parent.clone()];
        let mut mw = vec![pweight];
        for k in 1..levels {
            let (pu, pm) = (&up[k - 1], &mw[k - 1]);
            let nu: Vec<u32> = (0..n).map(|v| pu[pu[v] as usize]).collect();
            let nm: Vec<u64> =
                (0..n).map(|v| pm[v].max(pm[pu[v] as usize])).collect();
            up.push(nu);
            mw.push(nm);
        }
        PathMax { comp, depth, up, mw }
    }

    /// Max edge weight between `u` and `v`, or None across trees.
    fn path_max(&self, u: NodeId, v: NodeId) -> Option<u64> {
        if self.comp[u as usize] != self.comp[v as usize] {
            return None;
        }
        let (mut u, mut v) = (u as usize, v as usize);
        let mut best = 0u64;
        if self.depth[u] < self.depth[v] {
            std::mem::swap(&mut u, &mut v);
        }
        let mut diff = self.depth[u] - self.depth[v];
        for k in 0..self.up.len() {
            if diff >> k & 1 == 1 {
                best = best.max(self.mw[k][u]);
                u = self.up[k][u] as usize;
                diff ^= 1 << k;
            }
        }
        if u == v {
            return Some(best);
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][u] != self.up[k][v] {
                best = best.max(self.mw[k][u]).max(self.mw[k][v]);
                u = self.up[k][u] as usize;
                v = self.up[k][v] as usize;
            }
        }
        Some(best.max(self.mw[0][u]).max(self.mw[0][v]))
    }
}
