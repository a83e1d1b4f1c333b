use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::{Graph, NodeId};
use crate::oracle::oracle_components;

/// Cover of a tree by connected subtrees of sizes in `[s, 3s]`, each sharing
/// at most one node with the union of the others.
///
/// Construction: recursively split off a subtree whose size and complement are
/// both at least `s`; when no such subtree exists, pick a root all of whose
/// child subtrees have size below `s` and group those subtrees greedily into
/// batches of `[s-1, 3s-1]` nodes, adding the root to each batch.
pub fn almost_partition_tree(tree: &Graph, s: usize) -> Result<Vec<Vec<NodeId>>, GraphError> {
    let n = tree.n();
    if tree.edge_count() != n.saturating_sub(1) || oracle_components(tree).component_count() != 1 {
        return Err(GraphError::NotATree);
    }
    if n < s {
        return Err(GraphError::TreeTooSmall(n, s));
    }
    let mut out = Vec::new();
    let nodes: Vec<NodeId> = (0..n as NodeId).collect();
    split(tree, nodes, s, &mut out);
    for part in &mut out {
        part.sort_unstable();
    }
    Ok(out)
}

fn split(g: &Graph, nodes: Vec<NodeId>, s: usize, out: &mut Vec<Vec<NodeId>>) {
    let t = nodes.len();
    debug_assert!(t >= s);
    if t <= 3 * s {
        out.push(nodes);
        return;
    }

    let root = *nodes.iter().min().unwrap();
    let (order, parent, size) = rooted_sizes(g, &nodes, root);

    // balanced subtree: both it and its complement have >= s nodes
    for &v in &order {
        if v == root {
            continue;
        }
        let sz = size[&v] as usize;
        if sz >= s && t - sz >= s {
            let inside = collect_subtree(&order, &parent, v);
            let inside_set: std::collections::BTreeSet<NodeId> = inside.iter().copied().collect();
            let rest: Vec<NodeId> = nodes.iter().copied().filter(|u| !inside_set.contains(u)).collect();
            split(g, inside, s, out);
            split(g, rest, s, out);
            return;
        }
    }

    // no balanced subtree: walk heavy children until every child subtree is
    // smaller than s, then group child subtrees around that root
    let mut r = root;
    loop {
        let heavy = order
            .iter()
            .copied()
            .filter(|&v| parent.get(&v) == Some(&r))
            .max_by_key(|v| (size[v], *v));
        match heavy {
            Some(h) if size[&h] as usize >= s => r = h,
            _ => break,
        }
    }

    // re-root at r: the neighbor-side components of nodes \ {r}
    let (order2, parent2, size2) = rooted_sizes(g, &nodes, r);
    let mut children: Vec<NodeId> = order2
        .iter()
        .copied()
        .filter(|&v| parent2.get(&v) == Some(&r))
        .collect();
    children.sort_unstable();
    debug_assert!(children.iter().all(|c| (size2[c] as usize) < s));

    let mut batches: Vec<Vec<NodeId>> = Vec::new();
    let mut current: Vec<NodeId> = Vec::new();
    for c in children {
        current.extend(collect_subtree(&order2, &parent2, c));
        if current.len() >= s - 1 {
            batches.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        // leftover below s-1 nodes joins the last closed batch
        batches.last_mut().unwrap().extend(current);
    }
    for mut b in batches {
        b.push(r);
        debug_assert!(b.len() >= s && b.len() <= 3 * s);
        out.push(b);
    }
}

/// BFS order, parents and subtree sizes of the tree induced by `nodes`,
/// rooted at `root`.
fn rooted_sizes(
    g: &Graph,
    nodes: &[NodeId],
    root: NodeId,
) -> (Vec<NodeId>, BTreeMap<NodeId, NodeId>, BTreeMap<NodeId, u32>) {
    let in_set: std::collections::BTreeSet<NodeId> = nodes.iter().copied().collect();
    let mut order = vec![root];
    let mut parent = BTreeMap::new();
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in g.neighbors(u) {
            if in_set.contains(&v) && v != root && !parent.contains_key(&v) {
                parent.insert(v, u);
                order.push(v);
            }
        }
    }
    let mut size: BTreeMap<NodeId, u32> = order.iter().map(|&v| (v, 1)).collect();
    for &v in order.iter().rev() {
        if let Some(&p) = parent.get(&v) {
            *size.get_mut(&p).unwrap() += size[&v];
        }
    }
    (order, parent, size)
}

fn collect_subtree(
    order: &[NodeId],
    parent: &BTreeMap<NodeId, NodeId>,
    v: NodeId,
) -> Vec<NodeId> {
    let mut inside: std::collections::BTreeSet<NodeId> = std::iter::once(v).collect();
    for &u in order {
        if let Some(p) = parent.get(&u) {
            if inside.contains(p) {
                inside.insert(u);
            }
        }
    }
    inside.into_iter().collect()
}
