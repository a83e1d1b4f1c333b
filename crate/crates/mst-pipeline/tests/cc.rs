use clique_runtime::{CliqueRuntime, RuntimeConfig};
use graph_core::{gen_gnp, gen_planted, gen_path, oracle_components, Graph};
use mst_pipeline::{connected_components, run_cc};

fn rt(n: usize) -> CliqueRuntime {
    CliqueRuntime::new(n, RuntimeConfig::default())
}

#[test]
fn planted_components_recovered() {
    let g = gen_planted(96, &[40, 32, 24], 7).unwrap();
    let out = connected_components(&mut rt(96), &g, 3).unwrap();
    assert!(out.same_components(&oracle_components(&g)));
}

#[test]
fn empty_graph_stays_singletons() {
    let g = Graph::empty(24);
    let out = connected_components(&mut rt(24), &g, 1).unwrap();
    assert_eq!(out.component_count(), 24);
}

#[test]
fn path_collapses_to_one_component() {
    let g = gen_path(200);
    let out = connected_components(&mut rt(200), &g, 9).unwrap();
    assert_eq!(out.component_count(), 1);
}

#[test]
fn random_graphs_match_oracle() {
    for seed in 0..20 {
        for &(n, p) in &[(64usize, 0.05f64), (128, 2.0 / 128.0), (128, 0.3)] {
            let g = gen_gnp(n, p, seed);
            let out = connected_components(&mut rt(n), &g, seed ^ 0x51).unwrap();
            assert!(
                out.same_components(&oracle_components(&g)),
                "n={n} p={p} seed={seed}"
            );
        }
    }
}

#[test]
fn rounds_charged_do_not_depend_on_n() {
    let mut costs = Vec::new();
    for n in [64usize, 256, 1024] {
        let g = gen_gnp(n, 1.5 / n as f64, 13);
        let (_, trace) = run_cc(&g, 5).unwrap();
        costs.push(trace.rounds_charged);
    }
    assert!(costs.windows(2).all(|w| w[0] == w[1]), "costs {costs:?}");
}

#[test]
fn identical_runs_are_deterministic() {
    let g = gen_gnp(128, 0.1, 21);
    let (a, ta) = run_cc(&g, 77).unwrap();
    let (b, tb) = run_cc(&g, 77).unwrap();
    assert!(a.same_components(&b));
    assert_eq!(ta, tb);
}
