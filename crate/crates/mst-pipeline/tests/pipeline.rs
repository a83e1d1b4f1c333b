use std::collections::BTreeSet;

use clique_runtime::{CliqueRuntime, RuntimeConfig};
use graph_core::{
    gen_gnp, gen_weights, oracle_components, oracle_mst, random_tree, NodeId, WeightedGraph,
};
use mst_pipeline::{
    assign_proxies, distribute_neighbor_tables, extract_mst, mst, parallel_cc,
    threshold_instances, run_mst, PipelineParams,
};

fn rt(n: usize) -> CliqueRuntime {
    CliqueRuntime::new(n, RuntimeConfig::default())
}

fn edge_set(edges: &[(NodeId, NodeId, u64)]) -> BTreeSet<(NodeId, NodeId)> {
    edges.iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect()
}

#[test]
fn tree_input_returns_itself() {
    let g = gen_weights(&random_tree(40, 3), 4);
    let (forest, report) = run_mst(&g, 9).unwrap();
    assert_eq!(edge_set(&forest), oracle_mst(&g));
    assert_eq!(forest.len(), 39);
    assert_eq!(report.mst_weight, g.total_weight());
}

#[test]
fn small_complete_graph_matches_kruskal() {
    let g = WeightedGraph::build(
        4,
        &[(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (1, 3, 5), (2, 3, 6)],
    )
    .unwrap();
    let (forest, _) = run_mst(&g, 5).unwrap();
    assert_eq!(edge_set(&forest), oracle_mst(&g));
}

#[test]
fn disconnected_input_yields_a_forest() {
    let edges = [(0, 1, 5), (1, 2, 3), (4, 5, 1), (5, 6, 2), (4, 6, 9)];
    let g = WeightedGraph::build(8, &edges).unwrap();
    let (forest, _) = run_mst(&g, 2).unwrap();
    assert_eq!(edge_set(&forest), oracle_mst(&g));
    assert_eq!(forest.len(), 4);
}

#[test]
fn random_graphs_match_the_oracle() {
    for seed in 0..10 {
        for &(n, p) in &[(64usize, 0.15f64), (96, 2.0 / 96.0), (128, 0.4)] {
            let g = gen_weights(&gen_gnp(n, p, seed), seed ^ 0x9e);
            let (forest, _) = run_mst(&g, seed).unwrap();
            assert_eq!(edge_set(&forest), oracle_mst(&g), "n={n} p={p} seed={seed}");
        }
    }
}

#[test]
fn duplicate_weights_resolve_deterministically() {
    let g = WeightedGraph::build(
        4,
        &[(0, 1, 7), (1, 2, 7), (2, 3, 7), (0, 3, 7), (0, 2, 7)],
    )
    .unwrap();
    let (forest, _) = run_mst(&g, 1).unwrap();
    // ranking breaks ties by endpoint pair, matching the oracle's order
    assert_eq!(edge_set(&forest), oracle_mst(&g));
}

#[test]
fn rounds_charged_do_not_depend_on_n() {
    let mut costs = Vec::new();
    for n in [64usize, 128, 256] {
        let g = gen_weights(&gen_gnp(n, 0.2, 17), 18);
        let (_, report) = run_mst(&g, 23).unwrap();
        costs.push(report.rounds);
    }
    assert!(costs.windows(2).all(|w| w[0] == w[1]), "costs {costs:?}");
}

#[test]
fn report_totals_are_consistent() {
    let g = gen_weights(&gen_gnp(80, 0.25, 6), 7);
    let (forest, report) = run_mst(&g, 31).unwrap();
    assert_eq!(report.edge_count, forest.len());
    assert_eq!(report.mst_weight, forest.iter().map(|&(_, _, w)| w).sum::<u64>());
    assert_eq!(report.rounds, report.phase_rounds.values().sum::<u64>());
    assert!(report.max_load <= 4 * 80);
}

#[test]
fn parallel_instances_match_their_oracles() {
    for seed in 0..10 {
        let n = 256;
        let g = gen_weights(&gen_gnp(n, 0.05, seed), seed ^ 3);
        let params = PipelineParams::for_n(n, seed);
        let mut engine = rt(n);
        let inst = threshold_instances(&mut engine, &g, params.m).unwrap();
        let map = assign_proxies(&mut engine, &inst.degrees(), params.m, params.proxy_cap)
            .unwrap();
        let parts = parallel_cc(&mut engine, &inst, &map, &params, seed ^ 0xaa).unwrap();
        for i in 0..params.m {
            let truth = oracle_components(&inst.instance_graph(i));
            assert!(parts[i].same_components(&truth), "seed {seed} instance {i}");
        }
    }
}

#[test]
fn nested_path_instances_are_prefix_segments() {
    // path with ascending weights: instance i connects exactly the nodes
    // touched by the i+1 lightest groups
    let n = 16;
    let edges: Vec<(NodeId, NodeId, u64)> =
        (0..15u32).map(|v| (v, v + 1, v as u64 + 1)).collect();
    let g = WeightedGraph::build(n, &edges).unwrap();
    let params = PipelineParams::for_n(n, 0);
    let mut engine = rt(n);
    let inst = threshold_instances(&mut engine, &g, params.m).unwrap();
    let map = assign_proxies(&mut engine, &inst.degrees(), params.m, params.proxy_cap).unwrap();
    let parts = parallel_cc(&mut engine, &inst, &map, &params, 4).unwrap();
    for i in 0..params.m {
        let joined = inst.prefix_len(i);
        // first joined+1 nodes form one segment, the rest are singletons
        for v in 0..joined as u32 {
            assert_eq!(parts[i].label(v), 0, "instance {i}");
        }
        for v in joined as u32 + 1..n as u32 {
            assert_eq!(parts[i].label(v), v, "instance {i}");
        }
    }
}

#[test]
fn extraction_agrees_with_kruskal_given_oracle_partitions() {
    for seed in 0..20 {
        let n = 64;
        let g = gen_weights(&gen_gnp(n, 0.2, seed), seed ^ 0x77);
        let mut engine = rt(n);
        let inst = threshold_instances(&mut engine, &g, 8).unwrap();
        let parts: Vec<_> =
            (0..8).map(|i| oracle_components(&inst.instance_graph(i))).collect();
        let forest = extract_mst(&mut engine, &inst, &parts).unwrap();
        assert_eq!(edge_set(&forest), oracle_mst(&g), "seed {seed}");
    }
}

#[test]
fn single_group_extraction_is_plain_kruskal() {
    let g = gen_weights(&gen_gnp(32, 0.2, 5), 6);
    let mut engine = rt(32);
    let inst = threshold_instances(&mut engine, &g, 1).unwrap();
    let parts = vec![oracle_components(&inst.instance_graph(0))];
    let forest = extract_mst(&mut engine, &inst, &parts).unwrap();
    assert_eq!(edge_set(&forest), oracle_mst(&g));
}

#[test]
fn explicit_runtime_mst_matches_wrapper() {
    let n = 96;
    let g = gen_weights(&gen_gnp(n, 0.1, 8), 9);
    let params = PipelineParams::for_n(n, 42);
    let mut engine = rt(n);
    let direct = mst(&mut engine, &g, &params).unwrap();
    assert_eq!(edge_set(&direct), oracle_mst(&g));
}
