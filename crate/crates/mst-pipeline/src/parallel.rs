use clique_runtime::CliqueRuntime;
use graph_core::{merge_cc_solutions, subseed, Graph, Partition};
use sketch_cc::gp_reduce_batch;
use size_reduce::reduce_components_sparse_local;
use sparsify::reduce_degree_plan;

use crate::error::PipelineError;
use crate::instances::NestedInstances;
use crate::params::PipelineParams;
use crate::proxy::ProxyMap;

/// Runs the whole component pipeline on all m nested instances at once.
/// Local computation happens per instance; communication is charged as
/// aggregate routed batches over the proxy layout, at the auxiliary-node
/// round scale, with per-node loads checked by the runtime. The round
/// count is a fixed function of the schedule — never of n, m, or the
/// instance contents.
pub fn parallel_cc(
    rt: &mut CliqueRuntime,
    inst: &NestedInstances,
    map: &ProxyMap,
    params: &PipelineParams,
    seed: u64,
) -> Result<Vec<Partition>, PipelineError> {
    let n = inst.n;
    let m = inst.m;
    rt.set_phase("parallel-cc");
    rt.set_round_scale(params.aux_scale);

    let graphs: Vec<Graph> = (0..m).map(|i| inst.instance_graph(i)).collect();

    // coordinator-out loads: instance i's coordinator (node i) reaches all
    // of the instance's proxies; reused by every dissemination round
    let mut diss_sent = vec![0u64; n];
    let mut diss_recv = vec![0u64; n];
    for i in 0..m {
        diss_sent[i] += n as u64;
        for v in 0..n as u32 {
            diss_recv[map.phys_for(i, v) as usize] += 1;
        }
    }

    // degree-threshold split, batched
    let mut gather1 = Loads::new(n);
    let mut gather2 = Loads::new(n);
    let splits: Vec<sparsify::SparsifyResult> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (s1, s2, split) = reduce_degree_plan(g, params.s_sparsify);
            for &(_, v) in &s1 {
                gather1.add(map.phys_for(i, v), i as u32, 1);
            }
            for &(_, v) in &s2 {
                gather2.add(map.phys_for(i, v), i as u32, 1);
            }
            split
        })
        .collect();
    rt.lenzen_route_loads(&diss_sent, &diss_recv)?;
    rt.lenzen_route_loads(&gather1.sent, &gather1.recv)?;
    rt.lenzen_route_loads(&diss_sent, &diss_recv)?;
    rt.lenzen_route_loads(&gather2.sent, &gather2.recv)?;
    rt.lenzen_route_loads(&diss_sent, &diss_recv)?;

    // dense sides, all instances in one sketch batch
    let parts_a: Vec<Partition> = {
        let actives: Vec<Partition> = splits
            .iter()
            .map(|sp| {
                let mut c = sp.c_a.clone();
                c.set_active_from(&sp.g_a);
                c
            })
            .collect();
        let refs: Vec<(&Graph, &Partition)> =
            splits.iter().zip(&actives).map(|(sp, c)| (&sp.g_a, c)).collect();
        gp_reduce_batch(rt, &refs, subseed(seed, 0xda))?
    };

    // sparse sides: batched component-count reduction. Bosses are spread so
    // each physical node serves one (instance, sample) pair.
    let samples = params.m;
    let boss_phys = |i: usize, b: usize| ((i * samples + b) % n) as u32;
    let mut ship = Loads::new(n);
    let mut flags = Loads::new(n);
    let mut replies = Loads::new(n);
    let mut gather = Loads::new(n);
    let shrunk: Vec<Partition> = splits
        .iter()
        .enumerate()
        .map(|(i, sp)| {
            let (part, art) = reduce_components_sparse_local(
                &sp.g_b,
                samples,
                params.p_sample,
                subseed(seed, 0x100 + i as u64),
            );
            for (b, sample) in art.sample_set.samples.iter().enumerate() {
                for &(u, v) in sample {
                    ship.add(map.phys_for(i, u.max(v)), boss_phys(i, b), 1);
                }
            }
            for v in 0..n as u32 {
                let pv = map.phys_for(i, v);
                for b in 0..samples {
                    flags.add(pv, boss_phys(i, b), 1);
                    replies.add(boss_phys(i, b), pv, 1);
                }
                gather.add(pv, i as u32, 1);
            }
            part
        })
        .collect();
    rt.lenzen_route_loads(&ship.sent, &ship.recv)?;
    rt.lenzen_route_loads(&flags.sent, &flags.recv)?;
    rt.lenzen_route_loads(&replies.sent, &replies.recv)?;
    rt.lenzen_route_loads(&gather.sent, &gather.recv)?;
    rt.lenzen_route_loads(&diss_sent, &diss_recv)?;
    rt.lenzen_route_loads(&diss_sent, &diss_recv)?;

    let parts_b: Vec<Partition> = {
        let refs: Vec<(&Graph, &Partition)> =
            splits.iter().zip(&shrunk).map(|(sp, p)| (&sp.g_b, p)).collect();
        gp_reduce_batch(rt, &refs, subseed(seed, 0xdb))?
    };

    // combine the two halves per instance and ship labels back to the
    // original nodes
    let out: Vec<Partition> = (0..m)
        .map(|i| {
            let mut p = merge_cc_solutions(&parts_a[i], &parts_b[i])?;
            p.set_active_from(&graphs[i]);
            assert_eq!(p.active_count(), 0, "instance solution must be complete");
            Ok(p)
        })
        .collect::<Result<_, PipelineError>>()?;
    let mut back_sent = vec![0u64; n];
    let mut back_recv = vec![0u64; n];
    for i in 0..m {
        back_sent[i] += n as u64;
        for v in 0..n {
            back_recv[v] += 1;
        }
    }
    rt.lenzen_route_loads(&back_sent, &back_recv)?;

    rt.set_round_scale(1);
    Ok(out)
}

struct Loads {
    sent: Vec<u64>,
    recv: Vec<u64>,
}

impl Loads {
    fn new(n: usize) -> Loads {
        Loads { sent: vec![0; n], recv: vec![0; n] }
    }

    fn add(&mut self, src: u32, dst: u32, words: u64) {
        self.sent[src as usize] += words;
        self.recv[dst as usize] += words;
    }
}
