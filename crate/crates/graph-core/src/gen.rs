use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, NodeId, WeightedGraph};

/// Erdos-Renyi G(n, p), deterministic for a fixed seed. Uses geometric
/// edge skipping so sparse graphs are cheap to sample.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    if p >= 1.0 {
        for u in 0..n as NodeId {
            for v in u + 1..n as NodeId {
                edges.push((u, v));
            }
        }
        return Graph::build(n, &edges).unwrap();
    }
    if p > 0.0 && n > 1 {
        let total = n as u64 * (n as u64 - 1) / 2;
        let log_q = (1.0 - p).ln();
        let mut idx: u64 = 0;
        loop {
            let r: f64 = rng.gen::<f64>();
            let skip = ((1.0 - r).ln() / log_q).floor() as u64;
            idx = idx.saturating_add(skip);
            if idx >= total {
                break;
            }
            edges.push(pair_from_index(n, idx));
            idx += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

fn pair_from_index(n: usize, idx: u64) -> (NodeId, NodeId) {
    // row u holds n-1-u pairs (u, u+1..n)
    let mut u = 0u64;
    let mut rem = idx;
    loop {
        let row = (n as u64 - 1) - u;
        if rem < row {
            return (u as NodeId, (u + 1 + rem) as NodeId);
        }
        rem -= row;
        u += 1;
    }
}

/// Graph with planted connected components of the given sizes: a random
/// spanning tree per block plus a few random intra-block edges.
pub fn gen_planted(n: usize, sizes: &[usize], seed: u64) -> Result<Graph, GraphError> {
    if sizes.iter().sum::<usize>() != n {
        return Err(GraphError::BadComponentSizes(sizes.iter().sum(), n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut base: NodeId = 0;
    for &sz in sizes {
        let block: Vec<NodeId> = (base..base + sz as NodeId).collect();
        edges.extend(random_tree_edges(&block, &mut rng));
        // sprinkle extra intra-block edges
        for _ in 0..sz {
            let a = block[rng.gen_range(0..sz)];
            let b = block[rng.gen_range(0..sz)];
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        base += sz as NodeId;
    }
    Graph::build(n, &edges)
}

/// Path 0-1-...-(n-1).
pub fn gen_path(n: usize) -> Graph {
    let edges: Vec<(NodeId, NodeId)> = (1..n as NodeId).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges).unwrap()
}

/// Uniformly random labelled tree on n nodes (Prufer-free attachment scheme).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<NodeId> = (0..n as NodeId).collect();
    let edges = random_tree_edges(&nodes, &mut rng);
    Graph::build(n, &edges).unwrap()
}

fn random_tree_edges(block: &[NodeId], rng: &mut ChaCha8Rng) -> Vec<(NodeId, NodeId)> {
    let mut order: Vec<NodeId> = block.to_vec();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..order.len() {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    edges
}

/// Assigns pairwise-distinct weights: a random permutation of ranks
/// `1..=|E|`.
pub fn gen_weights(g: &Graph, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let mut ranks: Vec<u64> = (1..=edges.len() as u64).collect();
    ranks.shuffle(&mut rng);
    let weighted: Vec<(NodeId, NodeId, u64)> = edges
        .into_iter()
        .zip(ranks)
        .map(|((u, v), w)| (u, v, w))
        .collect();
    WeightedGraph::build(g.n(), &weighted).unwrap()
}
