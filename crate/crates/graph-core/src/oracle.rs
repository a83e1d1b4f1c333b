use std::collections::{BTreeSet, VecDeque};

use crate::dsu::DisjointSets;
use crate::graph::{Graph, NodeId, WeightedGraph};
use crate::partition::{Partition, SpanningForest};

/// Sequential connected-components oracle: BFS labelling plus a BFS spanning
/// forest, components labelled by their minimum node id.
pub fn oracle_components(g: &Graph) -> Partition {
    let n = g.n();
    let mut labels = vec![u32::MAX; n];
    let mut forest = SpanningForest::new(n);
    for start in 0..n as NodeId {
        if labels[start as usize] != u32::MAX {
            continue;
        }
        labels[start as usize] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if labels[v as usize] == u32::MAX {
                    labels[v as usize] = start;
                    forest.set_parent(v, u);
                    queue.push_back(v);
                }
            }
        }
    }
    let mut p = Partition::from_labels(&labels).with_forest(forest);
    p.set_active_from(g);
    p
}

/// Kruskal minimum spanning forest; ties broken by `(weight, u, v)` so the
/// result is deterministic even with duplicate weights.
pub fn oracle_mst(g: &WeightedGraph) -> BTreeSet<(NodeId, NodeId)> {
    let mut edges: Vec<(u64, NodeId, NodeId)> =
        g.edges().map(|(u, v, w)| (w, u, v)).collect();
    edges.sort_unstable();
    let mut dsu = DisjointSets::new(g.n());
    let mut out = BTreeSet::new();
    for (_, u, v) in edges {
        if dsu.union(u, v) {
            out.insert((u, v));
        }
    }
    out
}

pub fn oracle_mst_weight(g: &WeightedGraph) -> u64 {
    oracle_mst(g)
        .into_iter()
        .map(|(u, v)| g.weight(u, v).unwrap())
        .sum()
}
