use std::collections::BTreeMap;

use clique_runtime::{CliqueRuntime, RuntimeError};
use graph_core::{subseed, DisjointSets, Graph, NodeId, Partition, SpanningForest};
use thiserror::Error;

use crate::sketch::{build_node_sketch, merge, L0Sketch, SketchParams};

/// Boruvka sub-rounds always executed per invocation; running out is a
/// reportable statistical finding, which keeps the constant-rounds claim
/// falsifiable.
pub const GP_BUDGET: u32 = 32;
/// Cell slots are spread over this many routed batches per sub-round.
pub const SLOT_BATCHES: u32 = 8;

#[derive(Debug, Error)]
pub enum GpError {
    #[error("active component count {count} exceeds the {cap} cap")]
    TooManyActive { count: usize, cap: usize },
    #[error("merge budget of {0} sub-rounds exhausted with growable components left")]
    IterationBudget(u32),
    #[error(transparent)]
    Runtime(#[from] RuntimeError),
}

/// Generous stand-in for the O(n / log log n) precondition.
pub fn active_cap(n: usize) -> usize {
    let ll = (n.max(4) as f64).log2().log2().max(2.0);
    ((8.0 * n as f64 / ll).ceil() as usize).max(8)
}

/// Finishes one partition into the complete partition of `g`.
pub fn gp_reduce(
    rt: &mut CliqueRuntime,
    g: &Graph,
    p: &Partition,
    seed: u64,
) -> Result<Partition, GpError> {
    let mut out = gp_reduce_batch(rt, &[(g, p)], seed)?;
    Ok(out.pop().expect("one instance in, one out"))
}

/// Runs up to sqrt(n) instances against one fixed communication schedule.
///
/// Per sub-round, every instance gets fresh sketch seeds and each cell slot
/// (instance, level, row) is assigned a server node; slots are spread over
/// `SLOT_BATCHES` routed batches so a server owns at most one slot per
/// batch. Members of growable components send their slot cells (4 words:
/// label + 3 cell fields) to the servers; servers aggregate per component
/// label, decode candidate boundary edges, and forward them to the
/// component representative (the node whose id is the label);
/// representatives pick one candidate for the instance coordinator (node i
/// for instance i), which verifies and unions it, then returns fresh
/// labels. The schedule length is fixed, so charged rounds depend on
/// neither n nor the number of instances.
pub fn gp_reduce_batch(
    rt: &mut CliqueRuntime,
    instances: &[(&Graph, &Partition)],
    seed: u64,
) -> Result<Vec<Partition>, GpError> {
    let cap = active_cap(rt.n());
    gp_reduce_batch_capped(rt, instances, seed, cap)
}

/// Same engine with an explicit active-component cap.
pub fn gp_reduce_batch_capped(
    rt: &mut CliqueRuntime,
    instances: &[(&Graph, &Partition)],
    seed: u64,
    cap: usize,
) -> Result<Vec<Partition>, GpError> {
    let n = rt.n();
    let m = instances.len();
    assert!(m >= 1 && m <= n, "instance count within 1..=n");
    rt.set_phase("gp-reduce");
    for (g, p) in instances {
        assert_eq!(g.n(), n);
        assert_eq!(p.n(), n);
        let count = p.active_count();
        if count > cap {
            return Err(GpError::TooManyActive { count, cap });
        }
    }

    let probe = SketchParams::for_n(n, rt.word_bits(), seed);
    let slots_per_inst = probe.levels * probe.rows;
    let slots_total = m as u32 * slots_per_inst;
    assert!(
        slots_total <= SLOT_BATCHES * n as u32,
        "slot schedule needs at most one slot per server per batch"
    );
    let server_of = |slot: u32| (slot / SLOT_BATCHES) % n as u32;

    // working state per instance: dsu labels, collected forest edges, and a
    // per-component done flag (true once the zero-test certifies it)
    let mut dsu: Vec<DisjointSets> = Vec::with_capacity(m);
    let mut forest_edges: Vec<Vec<(NodeId, NodeId)>> = vec![Vec::new(); m];
    let mut done: Vec<BTreeMap<NodeId, bool>> = Vec::with_capacity(m);
    for (i, (_, p)) in instances.iter().enumerate() {
        let mut d = DisjointSets::new(n);
        if let Some(f) = p.forest() {
            for (c, par) in f.edges() {
                d.union(c, par);
                forest_edges[i].push((c, par));
            }
        } else {
            for v in 0..n as u32 {
                d.union(v, p.label(v));
            }
        }
        dsu.push(d);
        done.push(
            p.component_labels()
                .into_iter()
                .map(|l| (l, !p.is_active(l)))
                .collect(),
        );
    }

    for t in 0..GP_BUDGET {
        let any_growable = done.iter().any(|d| d.values().any(|&f| !f));

        // build fresh sketches for members of growable components, and
        // tally the cell traffic as per-node aggregate loads
        let mut per_instance: Vec<BTreeMap<NodeId, L0Sketch>> = vec![BTreeMap::new(); m];
        let mut batch_sent: Vec<Vec<u64>> = vec![vec![0; n]; SLOT_BATCHES as usize];
        let mut batch_recv: Vec<Vec<u64>> = vec![vec![0; n]; SLOT_BATCHES as usize];
        if any_growable {
            for (i, (g, _)) in instances.iter().enumerate() {
                let params = SketchParams::for_n(
                    n,
                    rt.word_bits(),
                    subseed(seed, 0x9000 + t as u64 * 4096 + i as u64),
                );
                let labels = dsu[i].min_labels();
                let mut senders = 0u64;
                for v in 0..n as u32 {
                    let l = labels[v as usize];
                    if done[i][&l] {
                        continue;
                    }
                    let s = build_node_sketch(v, g.neighbors(v), params);
                    match per_instance[i].get_mut(&l) {
                        Some(acc) => *acc = merge(acc, &s),
                        None => {
                            per_instance[i].insert(l, s);
                        }
                    }
                    senders += 1;
                    for slot_in_inst in 0..slots_per_inst {
                        let k = ((i as u32 * slots_per_inst + slot_in_inst) % SLOT_BATCHES)
                            as usize;
                        batch_sent[k][v as usize] += 4;
                    }
                }
                for slot_in_inst in 0..slots_per_inst {
                    let slot = i as u32 * slots_per_inst + slot_in_inst;
                    let k = (slot % SLOT_BATCHES) as usize;
                    batch_recv[k][server_of(slot) as usize] += 4 * senders;
                }
            }
        }
        // the schedule is fixed: every batch runs (and charges) even idle
        for k in 0..SLOT_BATCHES as usize {
            rt.lenzen_route_loads(&batch_sent[k], &batch_recv[k])?;
        }

        // zero-test and decode per component; candidates flow
        // server -> representative -> instance coordinator
        let mut rep_loads: Vec<(u32, u32, u64)> = Vec::new();
        let mut coord_loads: Vec<(u32, u32, u64)> = Vec::new();
        let mut merges: Vec<Vec<(NodeId, NodeId)>> = vec![Vec::new(); m];
        for (i, comps) in per_instance.iter().enumerate() {
            for (&label, sk) in comps {
                if sk.is_zero() {
                    *done[i].get_mut(&label).unwrap() = true;
                    continue;
                }
                if let Some((u, v)) = sk.sample_edge() {
                    let slot = i as u32 * slots_per_inst + label % slots_per_inst;
                    rep_loads.push((server_of(slot), label, 1));
                    coord_loads.push((label, i as u32, 1));
                    merges[i].push((u, v));
                }
            }
        }
        rt.lenzen_route_bulk(rep_loads)?;
        rt.lenzen_route_bulk(coord_loads)?;

        for (i, (g, _)) in instances.iter().enumerate() {
            let mut merged_roots: Vec<NodeId> = Vec::new();
            for (u, v) in merges[i].drain(..) {
                assert!(g.has_edge(u, v), "candidate must be a real edge");
                if dsu[i].union(u, v) {
                    forest_edges[i].push((u, v));
                }
                merged_roots.push(dsu[i].find(u));
            }
            if !merged_roots.is_empty() {
                // re-key done flags under the new canonical labels; merge
                // results get re-tested next sub-round, untouched components
                // keep their certificate
                let labels = dsu[i].min_labels();
                let merged: std::collections::BTreeSet<NodeId> =
                    merged_roots.iter().map(|&r| labels[r as usize]).collect();
                let mut next: BTreeMap<NodeId, bool> = BTreeMap::new();
                for v in 0..n as u32 {
                    let l = labels[v as usize];
                    next.entry(l).or_insert_with(|| {
                        !merged.contains(&l) && done[i].get(&l).copied().unwrap_or(false)
                    });
                }
                done[i] = next;
            }
        }
        // coordinators hand fresh labels back, one word per node
        rt.broadcast_round(0..m as u32)?;
    }

    let mut outputs = Vec::with_capacity(m);
    for i in 0..m {
        if done[i].values().any(|&f| !f) {
            return Err(GpError::IterationBudget(GP_BUDGET));
        }
        let labels = dsu[i].min_labels();
        let forest = SpanningForest::from_edge_list(n, &forest_edges[i]);
        let mut p = Partition::from_labels(&labels).with_forest(forest);
        p.set_active_from(instances[i].0);
        outputs.push(p);
    }
    Ok(outputs)
}
