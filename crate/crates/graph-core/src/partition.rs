use std::collections::{BTreeMap, BTreeSet};

use crate::dsu::DisjointSets;
use crate::error::GraphError;
use crate::graph::{Graph, NodeId};

/// Spanning forest given by parent pointers; roots have none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    parent: Vec<Option<NodeId>>,
}

impl SpanningForest {
    pub fn new(n: usize) -> SpanningForest {
        SpanningForest { parent: vec![None; n] }
    }

    pub fn from_parents(parent: Vec<Option<NodeId>>) -> SpanningForest {
        SpanningForest { parent }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v as usize]
    }

    pub fn set_parent(&mut self, v: NodeId, p: NodeId) {
        self.parent[v as usize] = Some(p);
    }

    /// Forest edges as `(child, parent)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v as NodeId, p)))
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }

    /// True iff the parent pointers are acyclic.
    pub fn is_acyclic(&self) -> bool {
        let n = self.parent.len();
        // 0 = unseen, 1 = in progress, 2 = done
        let mut state = vec![0u8; n];
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            loop {
                if state[v] == 1 {
                    return false;
                }
                if state[v] == 2 {
                    break;
                }
                state[v] = 1;
                path.push(v);
                match self.parent[v] {
                    Some(p) => v = p as usize,
                    None => break,
                }
            }
            for u in path {
                state[u] = 2;
            }
        }
        true
    }

    /// Builds a forest from an edge list known to be acyclic per DSU check;
    /// edges that would close a cycle are skipped.
    pub fn from_edge_list(n: usize, edges: &[(NodeId, NodeId)]) -> SpanningForest {
        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut dsu = DisjointSets::new(n);
        for &(u, v) in edges {
            if dsu.union(u, v) {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        // orient each tree away from its minimum-id node
        let mut forest = SpanningForest::new(n);
        let mut seen = vec![false; n];
        for root in 0..n as NodeId {
            if seen[root as usize] {
                continue;
            }
            seen[root as usize] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u as usize] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        forest.set_parent(v, u);
                        queue.push_back(v);
                    }
                }
            }
        }
        forest
    }
}

/// Partition of the nodes into components, canonically labelled by each
/// component's minimum node id, with optional active flags and forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<NodeId>,
    active: BTreeSet<NodeId>,
    forest: Option<SpanningForest>,
}

impl Partition {
    /// Canonicalizes arbitrary labels to minimum-member labels.
    pub fn from_labels(raw: &[NodeId]) -> Partition {
        let mut min_of: BTreeMap<NodeId, NodeId> = BTreeMap::new();
        for (v, &l) in raw.iter().enumerate() {
            let e = min_of.entry(l).or_insert(v as NodeId);
            if (v as NodeId) < *e {
                *e = v as NodeId;
            }
        }
        let labels = raw.iter().map(|l| min_of[l]).collect();
        Partition { labels, active: BTreeSet::new(), forest: None }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            labels: (0..n as NodeId).collect(),
            active: BTreeSet::new(),
            forest: Some(SpanningForest::new(n)),
        }
    }

    pub fn with_forest(mut self, forest: SpanningForest) -> Partition {
        self.forest = Some(forest);
        self
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: NodeId) -> NodeId {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[NodeId] {
        &self.labels
    }

    pub fn forest(&self) -> Option<&SpanningForest> {
        self.forest.as_ref()
    }

    pub fn component_labels(&self) -> BTreeSet<NodeId> {
        self.labels.iter().copied().collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().len()
    }

    pub fn members(&self) -> BTreeMap<NodeId, Vec<NodeId>> {
        let mut m: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for (v, &l) in self.labels.iter().enumerate() {
            m.entry(l).or_default().push(v as NodeId);
        }
        m
    }

    pub fn component_size(&self, label: NodeId) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    pub fn is_active(&self, label: NodeId) -> bool {
        self.active.contains(&label)
    }

    pub fn active_labels(&self) -> &BTreeSet<NodeId> {
        &self.active
    }

    pub fn active_count(&self) -> usize {
        self.active.len()
    }

    pub fn set_active(&mut self, label: NodeId, flag: bool) {
        if flag {
            self.active.insert(label);
        } else {
            self.active.remove(&label);
        }
    }

    /// Flags each component active iff it has an edge leaving it in `reference`.
    pub fn set_active_from(&mut self, reference: &Graph) {
        self.active.clear();
        for (u, v) in reference.edges() {
            if self.labels[u as usize] != self.labels[v as usize] {
                self.active.insert(self.labels[u as usize]);
                self.active.insert(self.labels[v as usize]);
            }
        }
    }

    /// Label-set equality: same grouping of nodes, ignoring flags and forests.
    pub fn same_components(&self, other: &Partition) -> bool {
        self.labels == other.labels
    }
}

/// Complete partition of `(V, edges)`: exact connected components, flags unset.
pub fn complete_partition(n: usize, edges: &[(NodeId, NodeId)]) -> Partition {
    let mut dsu = DisjointSets::new(n);
    for &(u, v) in edges {
        dsu.union(u, v);
    }
    let labels = dsu.min_labels();
    Partition {
        labels,
        active: BTreeSet::new(),
        forest: Some(SpanningForest::from_edge_list(n, edges)),
    }
}

/// Combines two CC solutions over the same node set into the CC solution of
/// the union of their forests. Both inputs must carry forests.
pub fn merge_cc_solutions(p1: &Partition, p2: &Partition) -> Result<Partition, GraphError> {
    if p1.n() != p2.n() {
        return Err(GraphError::NodeCountMismatch(p1.n(), p2.n()));
    }
    let f1 = p1.forest().ok_or(GraphError::MissingForest)?;
    let f2 = p2.forest().ok_or(GraphError::MissingForest)?;
    let mut edges: Vec<(NodeId, NodeId)> = f1.edges().collect();
    edges.extend(f2.edges());
    Ok(complete_partition(p1.n(), &edges))
}
