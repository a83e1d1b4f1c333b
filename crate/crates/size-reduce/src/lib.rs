//! Component-count reduction for low-degree graphs: ship sqrt(n) random
//! edge samples to boss nodes, elect leaders, pick one parent per node from
//! the lexicographically best boss reply, and let the coordinator union the
//! parent edges. The output keeps soundness absolutely; completeness of
//! small components is statistical.

use std::collections::{BTreeMap, VecDeque};

use clique_runtime::{CliqueRuntime, RuntimeError};
use graph_core::{
    complete_partition, oracle_components, subseed, DisjointSets, Graph, NodeId, Partition,
    SpanningForest,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Samples per run: floor(sqrt(n)), at least 1.
pub fn default_sample_count(n: usize) -> usize {
    ((n as f64).sqrt().floor() as usize).max(1)
}

/// Leader/edge inclusion probability: 1 / max(2, log2 log2 n).
pub fn default_sample_prob(n: usize) -> f64 {
    let ll = (n.max(4) as f64).log2().log2();
    1.0 / ll.max(2.0)
}

/// Small-component threshold: floor(sqrt(log2 n)).
pub fn small_threshold(n: usize) -> usize {
    ((n.max(2) as f64).log2().sqrt().floor() as usize).max(1)
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleSet {
    pub m: usize,
    pub p: f64,
    /// samples[i] lives at boss node i.
    pub samples: Vec<Vec<(NodeId, NodeId)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BossReply {
    /// n − dist to the closest leader in the node's sample component, or 0
    /// when the component is leaderless.
    pub rank: u32,
    pub comp_size: u32,
    pub sample_id: u32,
    /// First hop toward the closest leader (or toward the min-id node of a
    /// leaderless component); self when the node is the target or isolated.
    pub parent_hint: NodeId,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceArtifacts {
    pub sample_set: SampleSet,
    pub leaders: Vec<bool>,
    /// replies[i][j] = boss i's reply to node j.
    pub replies: Vec<Vec<BossReply>>,
}

impl ReduceArtifacts {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("artifacts serialize")
    }
}

/// Each edge lands in each sample independently with probability `p`,
/// handled at its higher-id endpoint so it is considered exactly once.
pub fn sample_edges(
    rt: &mut CliqueRuntime,
    g: &Graph,
    m: usize,
    p: f64,
    seed: u64,
) -> Result<SampleSet, RuntimeError> {
    let ss = sample_edges_local(g, m, p, seed);
    rt.lenzen_route_bulk(sample_loads(&ss))?;
    Ok(ss)
}

/// Pure sampling, no accounting.
pub fn sample_edges_local(g: &Graph, m: usize, p: f64, seed: u64) -> SampleSet {
    let mut samples = Vec::with_capacity(m);
    for i in 0..m {
        let mut rng = ChaCha8Rng::seed_from_u64(subseed(seed, 0x5a17 + i as u64));
        let picked = g.edges().filter(|_| rng.gen_bool(p)).collect();
        samples.push(picked);
    }
    SampleSet { m, p, samples }
}

/// The routed loads realizing a sample set: higher endpoint to boss i.
pub fn sample_loads(ss: &SampleSet) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
    ss.samples
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&(u, v)| (u.max(v), i as u32, 1)))
}

/// Spanning forest of one boss's sample.
pub fn boss_forest(n: usize, sample: &[(NodeId, NodeId)]) -> SpanningForest {
    SpanningForest::from_edge_list(n, sample)
}

/// All of boss `sample_id`'s replies at once: one multi-source BFS over the
/// forest from every leader (or, in leaderless components, from the min-id
/// member), with ties toward smaller node ids.
pub fn boss_replies(forest: &SpanningForest, leaders: &[bool], sample_id: u32) -> Vec<BossReply> {
    let n = forest.n();
    assert_eq!(leaders.len(), n);
    let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut dsu = DisjointSets::new(n);
    for (c, p) in forest.edges() {
        adj[c as usize].push(p);
        adj[p as usize].push(c);
        dsu.union(c, p);
    }
    adj.iter_mut().for_each(|l| l.sort_unstable());
    let label = dsu.min_labels();

    let mut comp_size = vec![0u32; n];
    let mut comp_has_leader = vec![false; n];
    for v in 0..n {
        comp_size[label[v] as usize] += 1;
        if leaders[v] {
            comp_has_leader[label[v] as usize] = true;
        }
    }

    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        let l = label[v] as usize;
        let is_source = if comp_has_leader[l] { leaders[v] } else { v as u32 == label[v] };
        if is_source {
            dist[v] = 0;
            queue.push_back(v as NodeId);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v as usize] {
            if dist[u as usize] == u32::MAX {
                dist[u as usize] = dist[v as usize] + 1;
                queue.push_back(u);
            }
        }
    }

    (0..n as u32)
        .map(|j| {
            let l = label[j as usize] as usize;
            let d = dist[j as usize];
            let hint = if d == 0 {
                j
            } else {
                *adj[j as usize]
                    .iter()
                    .find(|&&w| dist[w as usize] == d - 1)
                    .expect("BFS predecessor exists")
            };
            BossReply {
                rank: if comp_has_leader[l] { n as u32 - d } else { 0 },
                comp_size: comp_size[l],
                sample_id,
                parent_hint: hint,
            }
        })
        .collect()
}

pub fn boss_reply(
    forest: &SpanningForest,
    leaders: &[bool],
    sample_id: u32,
    j: NodeId,
) -> BossReply {
    boss_replies(forest, leaders, sample_id)[j as usize]
}

/// Largest (rank, comp_size, sample_id, parent_hint) wins; no replies means
/// self-parent.
pub fn select_parent(v: NodeId, replies: &[BossReply]) -> NodeId {
    replies
        .iter()
        .max_by_key(|r| (r.rank, r.comp_size, r.sample_id, r.parent_hint))
        .map(|r| r.parent_hint)
        .unwrap_or(v)
}

pub fn reduce_components_sparse(
    rt: &mut CliqueRuntime,
    g: &Graph,
    seed: u64,
) -> Result<Partition, RuntimeError> {
    let (p, _) = reduce_components_sparse_full(
        rt,
        g,
        default_sample_count(g.n()),
        default_sample_prob(g.n()),
        seed,
    )?;
    Ok(p)
}

pub fn reduce_components_sparse_full(
    rt: &mut CliqueRuntime,
    g: &Graph,
    m: usize,
    p: f64,
    seed: u64,
) -> Result<(Partition, ReduceArtifacts), RuntimeError> {
    let n = g.n();
    assert_eq!(rt.n(), n);
    let (out, art) = reduce_components_sparse_local(g, m, p, seed);

    // schedule: sampled edges to bosses, leader flags to bosses, one reply
    // per (boss, node), parent edges to the coordinator, labels back out,
    // then a broadcast so activity flags are exact
    rt.set_phase("size-reduce");
    let coord: u32 = 0;
    rt.lenzen_route_bulk(sample_loads(&art.sample_set))?;
    rt.direct_round_bulk((0..n as u32).flat_map(|v| (0..m as u32).map(move |b| (v, b))))?;
    rt.lenzen_route_bulk((0..m as u32).flat_map(|b| (0..n as u32).map(move |v| (b, v, 1u64))))?;
    rt.lenzen_route_bulk((0..n as u32).map(|v| (v, coord, 1u64)))?;
    rt.direct_round_bulk((0..n as u32).map(|v| (coord, v)))?;
    rt.broadcast_round(0..n as u32)?;

    Ok((out, art))
}

/// Pure pipeline: sample, elect leaders, reply, select parents, union.
pub fn reduce_components_sparse_local(
    g: &Graph,
    m: usize,
    p: f64,
    seed: u64,
) -> (Partition, ReduceArtifacts) {
    let n = g.n();
    let slack = 8;
    let ll = (n.max(4) as f64).log2().log2().ceil() as usize;
    assert!(
        g.max_degree() <= ll + slack,
        "degree {} too high for sparse reduction (limit {})",
        g.max_degree(),
        ll + slack
    );

    let sample_set = sample_edges_local(g, m, p, seed);

    let mut rng = ChaCha8Rng::seed_from_u64(subseed(seed, 0x1ead));
    let leaders: Vec<bool> = (0..n).map(|_| rng.gen_bool(p)).collect();

    let replies: Vec<Vec<BossReply>> = sample_set
        .samples
        .iter()
        .enumerate()
        .map(|(i, sample)| boss_replies(&boss_forest(n, sample), &leaders, i as u32))
        .collect();

    let mut parent_edges: Vec<(NodeId, NodeId)> = Vec::new();
    for v in 0..n as u32 {
        let mine: Vec<BossReply> = replies.iter().map(|r| r[v as usize]).collect();
        let parent = select_parent(v, &mine);
        if parent != v {
            // every parent edge is a sample-forest edge, hence a real edge
            assert!(g.has_edge(v, parent), "parent hint must be a graph edge");
            parent_edges.push((v, parent));
        }
    }

    let mut out = complete_partition(n, &parent_edges);
    out.set_active_from(g);

    assert_soundness(g, &out);
    assert_leader_reach(&sample_set, &leaders, &out, n);

    (out, ReduceArtifacts { sample_set, leaders, replies })
}

/// The output never merges nodes from different true components.
fn assert_soundness(g: &Graph, out: &Partition) {
    let truth = oracle_components(g);
    for v in 0..g.n() as u32 {
        assert_eq!(
            truth.label(out.label(v)),
            truth.label(v),
            "output merged across true components at node {v}"
        );
    }
}

/// Any node that reaches a leader in some sample lands in an output
/// component containing a leader. Holds exactly, not just with high
/// probability.
fn assert_leader_reach(ss: &SampleSet, leaders: &[bool], out: &Partition, n: usize) {
    let mut out_has_leader: BTreeMap<NodeId, bool> = BTreeMap::new();
    for v in 0..n as u32 {
        *out_has_leader.entry(out.label(v)).or_default() |= leaders[v as usize];
    }
    for sample in &ss.samples {
        let mut dsu = DisjointSets::new(n);
        for &(u, v) in sample {
            dsu.union(u, v);
        }
        let label = dsu.min_labels();
        let mut has_leader = vec![false; n];
        for v in 0..n {
            if leaders[v] {
                has_leader[label[v] as usize] = true;
            }
        }
        for v in 0..n as u32 {
            if has_leader[label[v as usize] as usize] {
                assert!(
                    out_has_leader[&out.label(v)],
                    "node {v} reached a leader in a sample but not in the output"
                );
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeClassCounts {
    /// connected to a leader in the output
    pub v_alpha: usize,
    /// leaderless but in a small, exactly recovered component
    pub v_beta: usize,
    /// everything else
    pub v_gamma: usize,
}

pub fn classify_nodes(g: &Graph, out: &Partition, leaders: &[bool]) -> NodeClassCounts {
    let n = g.n();
    let truth = oracle_components(g);
    let s_small = small_threshold(n);
    let mut out_has_leader: BTreeMap<NodeId, bool> = BTreeMap::new();
    for v in 0..n as u32 {
        *out_has_leader.entry(out.label(v)).or_default() |= leaders[v as usize];
    }
    let mut counts = NodeClassCounts { v_alpha: 0, v_beta: 0, v_gamma: 0 };
    for v in 0..n as u32 {
        if out_has_leader[&out.label(v)] {
            counts.v_alpha += 1;
        } else if truth.component_size(truth.label(v)) <= s_small
            && out.component_size(out.label(v)) == truth.component_size(truth.label(v))
        {
            counts.v_beta += 1;
        } else {
            counts.v_gamma += 1;
        }
    }
    counts
}
