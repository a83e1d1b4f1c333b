use clique_runtime::{CliqueRuntime, RuntimeConfig};
use graph_core::{gen_gnp, gen_planted, oracle_components, Graph, Partition};
use sketch_cc::{gp_reduce, gp_reduce_batch, gp_reduce_batch_capped, GpError};
use size_reduce::reduce_components_sparse;

fn rt(n: usize) -> CliqueRuntime {
    CliqueRuntime::new(n, RuntimeConfig::default())
}

#[test]
fn complete_partition_passes_through() {
    let g = gen_gnp(32, 0.1, 3);
    let mut p = oracle_components(&g);
    p.set_active_from(&g); // everything inactive: already complete
    assert_eq!(p.active_count(), 0);
    let out = gp_reduce(&mut rt(32), &g, &p, 7).unwrap();
    assert!(out.same_components(&p));
}

#[test]
fn finishes_size_reduce_output() {
    let g = gen_planted(60, &[30, 30], 11).unwrap();
    let mut engine = rt(60);
    let handoff = reduce_components_sparse(&mut engine, &g, 5).unwrap();
    let out = gp_reduce(&mut engine, &g, &handoff, 13).unwrap();
    assert!(out.same_components(&oracle_components(&g)));
    assert_eq!(out.active_count(), 0);
}

#[test]
fn matches_oracle_on_sparse_random_graphs() {
    for seed in 0..30 {
        let n = 128;
        let g = gen_gnp(n, 2.0 / n as f64, seed);
        let p = Partition::singletons(n);
        let mut active = p;
        active.set_active_from(&g);
        let out = gp_reduce(&mut rt(n), &g, &active, seed ^ 0xabc).unwrap();
        assert!(out.same_components(&oracle_components(&g)), "seed {seed}");
    }
}

#[test]
fn batch_of_identical_instances_agrees() {
    let n = 64;
    let g = gen_gnp(n, 0.05, 9);
    let mut p = Partition::singletons(n);
    p.set_active_from(&g);
    let instances: Vec<_> = (0..8).map(|_| (&g, &p)).collect();
    let outs = gp_reduce_batch(&mut rt(n), &instances, 21).unwrap();
    let truth = oracle_components(&g);
    for out in &outs {
        assert!(out.same_components(&truth));
    }
}

#[test]
fn batch_of_empty_graphs_yields_singletons() {
    let n = 32;
    let g = Graph::empty(n);
    let mut p = Partition::singletons(n);
    p.set_active_from(&g);
    let instances: Vec<_> = (0..5).map(|_| (&g, &p)).collect();
    let outs = gp_reduce_batch(&mut rt(n), &instances, 2).unwrap();
    for out in outs {
        assert_eq!(out.component_count(), n);
    }
}

#[test]
fn overfull_precondition_is_rejected() {
    let n = 64;
    let g = graph_core::gen_path(n);
    let mut p = Partition::singletons(n);
    p.set_active_from(&g);
    let err = gp_reduce_batch_capped(&mut rt(n), &[(&g, &p)], 3, 10).unwrap_err();
    match err {
        GpError::TooManyActive { count, cap } => {
            assert_eq!(count, n);
            assert_eq!(cap, 10);
        }
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn rounds_charged_do_not_depend_on_n_or_instances() {
    let mut costs = Vec::new();
    for (n, m) in [(64usize, 1usize), (256, 1), (256, 4), (1024, 8)] {
        let g = gen_gnp(n, 1.5 / n as f64, 17);
        let mut p = Partition::singletons(n);
        p.set_active_from(&g);
        let instances: Vec<_> = (0..m).map(|_| (&g, &p)).collect();
        let mut engine = rt(n);
        gp_reduce_batch(&mut engine, &instances, 5).unwrap();
        costs.push(engine.metrics().rounds_charged);
    }
    assert!(costs.windows(2).all(|w| w[0] == w[1]), "costs {costs:?}");
}

#[test]
fn budget_holds_on_sparse_graphs_statistically() {
    // scaled-down pilot of the n=4096 acceptance check
    let n = 512;
    let trials = 50;
    let mut ok = 0;
    for seed in 0..trials {
        let g = gen_gnp(n, 2.0 / n as f64, seed);
        let mut p = Partition::singletons(n);
        p.set_active_from(&g);
        match gp_reduce(&mut rt(n), &g, &p, seed ^ 0x77) {
            Ok(out) => {
                assert!(out.same_components(&oracle_components(&g)));
                ok += 1;
            }
            Err(GpError::IterationBudget(_)) => {}
            Err(e) => panic!("unexpected {e:?}"),
        }
    }
    assert!(ok * 100 >= trials * 99, "{ok}/{trials} within budget");
}
