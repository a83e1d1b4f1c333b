use std::collections::BTreeSet;

use graph_core::{
    almost_partition_tree, complete_partition, gen_gnp, gen_planted, gen_weights,
    merge_cc_solutions, oracle_components, oracle_mst, oracle_mst_weight, random_tree, Graph,
    GraphError, NodeId, Partition, SpanningForest, WeightedGraph,
};
use proptest::prelude::*;

/// Independent recount: iterative DFS, no shared code with oracle_components.
fn dfs_component_sizes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n as NodeId {
        if seen[s as usize] {
            continue;
        }
        let mut stack = vec![s];
        seen[s as usize] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        sizes.push(count);
    }
    sizes.sort_unstable();
    sizes
}

/// Independent MST oracle: Prim with a linear scan.
fn prim_total_weight(g: &WeightedGraph) -> u64 {
    let n = g.n();
    let mut in_tree = vec![false; n];
    let mut best = vec![u64::MAX; n];
    let mut total = 0u64;
    for s in 0..n as NodeId {
        if in_tree[s as usize] {
            continue;
        }
        best[s as usize] = 0;
        loop {
            let mut pick = None;
            for v in 0..n {
                if !in_tree[v] && best[v] != u64::MAX {
                    match pick {
                        Some(p) if best[p] <= best[v] => {}
                        _ => pick = Some(v),
                    }
                }
            }
            let Some(v) = pick else { break };
            in_tree[v] = true;
            total += best[v];
            best[v] = u64::MAX;
            for (u, w) in g.neighbors(v as NodeId) {
                if !in_tree[u as usize] && w < best[u as usize] {
                    best[u as usize] = w;
                }
            }
        }
    }
    total
}

#[test]
fn build_graph_examples() {
    let g = Graph::build(3, &[(0, 1)]).unwrap();
    assert_eq!(g.neighbors(0), &[1]);
    assert_eq!(g.neighbors(1), &[0]);
    assert_eq!(g.neighbors(2), &[] as &[NodeId]);

    let g = Graph::build(2, &[(0, 1), (1, 0)]).unwrap();
    assert_eq!(g.edge_count(), 1);

    assert_eq!(
        Graph::build(4, &[(0, 4)]).unwrap_err(),
        GraphError::NodeOutOfRange(4, 4)
    );
    assert_eq!(Graph::build(4, &[(2, 2)]).unwrap_err(), GraphError::SelfLoop(2));
}

#[test]
fn complete_partition_examples() {
    let p = complete_partition(4, &[(0, 1), (2, 3)]);
    assert_eq!(p.labels(), &[0, 0, 2, 2]);

    let p = complete_partition(3, &[]);
    assert_eq!(p.labels(), &[0, 1, 2]);

    let cycle: Vec<(NodeId, NodeId)> = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    let p = complete_partition(6, &cycle);
    let g = Graph::build(6, &cycle).unwrap();
    assert!(p.same_components(&oracle_components(&g)));
    assert_eq!(p.labels(), &[0, 0, 0, 0, 0, 5]);
}

#[test]
fn oracle_components_examples() {
    let p = oracle_components(&Graph::empty(5));
    assert_eq!(p.component_count(), 5);

    let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let p = oracle_components(&k4);
    assert_eq!(p.component_count(), 1);
    assert_eq!(p.forest().unwrap().edge_count(), 3);

    let g = gen_gnp(64, 0.02, 7);
    let p = oracle_components(&g);
    let mut sizes: Vec<usize> = p.members().values().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, dfs_component_sizes(&g));
}

#[test]
fn oracle_mst_examples() {
    let t = WeightedGraph::build(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
    let mst: BTreeSet<_> = oracle_mst(&t);
    assert_eq!(mst, BTreeSet::from([(0, 1), (1, 2)]));

    let tree = WeightedGraph::build(4, &[(0, 1, 5), (1, 2, 1), (1, 3, 9)]).unwrap();
    assert_eq!(oracle_mst(&tree).len(), 3);

    let g = gen_weights(&gen_gnp(32, 0.3, 3), 3);
    assert_eq!(oracle_mst_weight(&g), prim_total_weight(&g));
}

#[test]
fn merge_cc_examples() {
    let mk = |n: usize, edges: &[(NodeId, NodeId)]| complete_partition(n, edges);
    let p1 = mk(3, &[(0, 1)]);
    let p2 = mk(3, &[(1, 2)]);
    let merged = merge_cc_solutions(&p1, &p2).unwrap();
    assert_eq!(merged.component_count(), 1);

    let singles = mk(3, &[]);
    let same = merge_cc_solutions(&p1, &singles).unwrap();
    assert!(same.same_components(&p1));

    // random forests over n=50: merge equals oracle on forest-edge union
    for seed in 0..20u64 {
        let f1 = random_tree_forest(50, seed);
        let f2 = random_tree_forest(50, seed + 1000);
        let p1 = Partition::from_labels(&labels_of_forest(&f1)).with_forest(f1.clone());
        let p2 = Partition::from_labels(&labels_of_forest(&f2)).with_forest(f2.clone());
        let merged = merge_cc_solutions(&p1, &p2).unwrap();
        let mut union: Vec<(NodeId, NodeId)> = f1.edges().collect();
        union.extend(f2.edges());
        let g = Graph::build(50, &union).unwrap();
        assert!(merged.same_components(&oracle_components(&g)));
        // result forest is a subset of the inputs' edges
        let allowed: BTreeSet<(NodeId, NodeId)> = union
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        for (a, b) in merged.forest().unwrap().edges() {
            assert!(allowed.contains(&(a.min(b), a.max(b))));
        }
    }
}

fn random_tree_forest(n: usize, seed: u64) -> SpanningForest {
    // forest over a random subset: take a random tree and drop some edges
    let t = random_tree(n, seed);
    let edges: Vec<(NodeId, NodeId)> = t
        .edges()
        .enumerate()
        .filter(|(i, _)| (graph_core::mix64(seed ^ *i as u64) % 3) != 0)
        .map(|(_, e)| e)
        .collect();
    SpanningForest::from_edge_list(n, &edges)
}

fn labels_of_forest(f: &SpanningForest) -> Vec<NodeId> {
    let edges: Vec<(NodeId, NodeId)> = f.edges().collect();
    complete_partition(f.n(), &edges).labels().to_vec()
}

fn check_almost_partition(tree: &Graph, s: usize, parts: &[Vec<NodeId>]) {
    let n = tree.n();
    // union covers
    let all: BTreeSet<NodeId> = parts.iter().flatten().copied().collect();
    assert_eq!(all.len(), n);
    for part in parts {
        // size within [s, 3s]
        assert!(part.len() >= s && part.len() <= 3 * s, "size {}", part.len());
        // connected subtree
        let set: BTreeSet<NodeId> = part.iter().copied().collect();
        let mut stack = vec![part[0]];
        let mut seen = BTreeSet::from([part[0]]);
        while let Some(u) = stack.pop() {
            for &v in tree.neighbors(u) {
                if set.contains(&v) && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        assert_eq!(seen.len(), part.len(), "part not connected");
    }
    // each part shares at most one node with the union of the others
    for (i, part) in parts.iter().enumerate() {
        let others: BTreeSet<NodeId> = parts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .flat_map(|(_, p)| p.iter().copied())
            .collect();
        let overlap = part.iter().filter(|v| others.contains(v)).count();
        assert!(overlap <= 1, "overlap {overlap}");
    }
}

#[test]
fn almost_partition_examples() {
    let path7 = graph_core::gen_path(7);
    let parts = almost_partition_tree(&path7, 3).unwrap();
    check_almost_partition(&path7, 3, &parts);

    let path3 = graph_core::gen_path(3);
    let parts = almost_partition_tree(&path3, 3).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0], vec![0, 1, 2]);

    let star: Vec<(NodeId, NodeId)> = (1..10).map(|v| (0, v)).collect();
    let star = Graph::build(10, &star).unwrap();
    let parts = almost_partition_tree(&star, 3).unwrap();
    check_almost_partition(&star, 3, &parts);
    for p in &parts {
        assert!(p.contains(&0), "every part contains the hub");
    }

    assert!(almost_partition_tree(&graph_core::gen_path(2), 3).is_err());
}

#[test]
fn almost_partition_random_trees() {
    for s in [3usize, 5] {
        for seed in 0..100u64 {
            let size = s + (graph_core::mix64(seed) as usize % (20 * s));
            let tree = random_tree(size, seed * 7 + s as u64);
            let parts = almost_partition_tree(&tree, s).unwrap();
            check_almost_partition(&tree, s, &parts);
        }
    }
}

#[test]
fn generator_examples() {
    let g = gen_planted(6, &[3, 3], 11).unwrap();
    assert_eq!(oracle_components(&g).component_count(), 2);

    assert_eq!(gen_gnp(20, 0.0, 5).edge_count(), 0);

    let a = gen_gnp(100, 0.5, 1);
    let b = gen_gnp(100, 0.5, 1);
    assert_eq!(a, b);

    assert!(gen_planted(6, &[3, 2], 0).is_err());
}

#[test]
fn weights_distinct_and_deterministic() {
    let g = gen_gnp(40, 0.2, 9);
    let w1 = gen_weights(&g, 4);
    let w2 = gen_weights(&g, 4);
    assert_eq!(w1, w2);
    assert!(w1.has_distinct_weights());
}

#[test]
fn graph_text_roundtrip() {
    let g = gen_weights(&gen_gnp(12, 0.4, 2), 2);
    let text = graph_core::write_weighted_graph_text(&g);
    let back = graph_core::parse_weighted_graph_text(&text).unwrap();
    assert_eq!(g, back);
    assert!(graph_core::parse_graph_text("3 1\n0 7\n").is_err());
    assert!(graph_core::parse_graph_text("nonsense").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complete_partition_matches_oracle(n in 1usize..40, seed in 0u64..1000) {
        let g = gen_gnp(n, 0.1, seed);
        let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
        let p = complete_partition(n, &edges);
        prop_assert!(p.same_components(&oracle_components(&g)));
    }

    #[test]
    fn merge_is_commutative_and_idempotent(seed in 0u64..1000) {
        let f1 = random_tree_forest(30, seed);
        let f2 = random_tree_forest(30, seed + 5000);
        let p1 = Partition::from_labels(&labels_of_forest(&f1)).with_forest(f1);
        let p2 = Partition::from_labels(&labels_of_forest(&f2)).with_forest(f2);
        let ab = merge_cc_solutions(&p1, &p2).unwrap();
        let ba = merge_cc_solutions(&p2, &p1).unwrap();
        prop_assert!(ab.same_components(&ba));
        let aa = merge_cc_solutions(&p1, &p1).unwrap();
        prop_assert!(aa.same_components(&p1));
    }

    #[test]
    fn kruskal_matches_prim(n in 2usize..32, seed in 0u64..500) {
        let g = gen_weights(&gen_gnp(n, 0.3, seed), seed ^ 1);
        prop_assert_eq!(oracle_mst_weight(&g), prim_total_weight(&g));
    }
}
