use clique_runtime::{CliqueRuntime, RoundTrace, RuntimeConfig};
use graph_core::{merge_cc_solutions, subseed, Graph, Partition};
use sketch_cc::gp_reduce;
use size_reduce::reduce_components_sparse;
use sparsify::reduce_degree;

use crate::error::PipelineError;
use crate::params::PipelineParams;

/// Single-instance connected components: split by degree threshold, finish
/// the dense side by sketch merging, shrink then finish the sparse side,
/// and combine the two complete solutions. Rounds charged depend only on
/// the fixed schedule, never on n.
pub fn connected_components(
    rt: &mut CliqueRuntime,
    g: &Graph,
    seed: u64,
) -> Result<Partition, PipelineError> {
    let params = PipelineParams::for_n(g.n(), seed);
    let sp = reduce_degree(rt, g, params.s_sparsify)?;

    let mut c_a = sp.c_a.clone();
    c_a.set_active_from(&sp.g_a);
    let p_a = gp_reduce(rt, &sp.g_a, &c_a, subseed(seed, 0xa1))?;

    let shrunk = reduce_components_sparse(rt, &sp.g_b, subseed(seed, 0xb2))?;
    let p_b = gp_reduce(rt, &sp.g_b, &shrunk, subseed(seed, 0xc3))?;

    let mut out = merge_cc_solutions(&p_a, &p_b)?;
    out.set_active_from(g);
    assert_eq!(out.active_count(), 0, "combined solution must be complete");
    Ok(out)
}

/// Convenience wrapper owning its runtime; returns the partition plus the
/// full cost trace.
pub fn run_cc(g: &Graph, seed: u64) -> Result<(Partition, RoundTrace), PipelineError> {
    let mut rt = CliqueRuntime::new(g.n(), RuntimeConfig::default());
    let out = connected_components(&mut rt, g, seed)?;
    Ok((out, rt.metrics()))
}
