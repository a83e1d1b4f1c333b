use crate::error::GraphError;

/// Node identifier: an index in `[0, n)`.
pub type NodeId = u32;

/// Undirected simple graph: symmetric sorted adjacency, no self-loops,
/// no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<NodeId>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating and symmetrizing.
    pub fn build(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::NodeOutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::NodeOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as NodeId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }
}

/// Weighted undirected graph. Weights are bounded non-negative integers;
/// MST routines additionally expect them pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    // weight parallel to graph.adj
    w: Vec<Vec<u64>>,
}

/// Weights must fit the runtime's word model; `2^48` covers `n^4` up to `n = 2^12`.
pub const MAX_WEIGHT: u64 = 1 << 48;

impl WeightedGraph {
    pub fn build(n: usize, edges: &[(NodeId, NodeId, u64)]) -> Result<WeightedGraph, GraphError> {
        let unweighted: Vec<(NodeId, NodeId)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = Graph::build(n, &unweighted)?;
        let mut w: Vec<Vec<u64>> = graph
            .adj
            .iter()
            .map(|list| vec![0u64; list.len()])
            .collect();
        for &(u, v, wt) in edges {
            if wt >= MAX_WEIGHT {
                return Err(GraphError::WeightTooLarge(wt));
            }
            let iu = graph.adj[u as usize].binary_search(&v).unwrap();
            let iv = graph.adj[v as usize].binary_search(&u).unwrap();
            w[u as usize][iu] = wt;
            w[v as usize][iv] = wt;
        }
        Ok(WeightedGraph { graph, w })
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.graph.degree(v)
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn weight(&self, u: NodeId, v: NodeId) -> Option<u64> {
        self.graph.adj[u as usize]
            .binary_search(&v)
            .ok()
            .map(|i| self.w[u as usize][i])
    }

    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = (NodeId, u64)> + '_ {
        self.graph.adj[v as usize]
            .iter()
            .copied()
            .zip(self.w[v as usize].iter().copied())
    }

    /// Edges as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, u64)> + '_ {
        self.graph.edges().map(move |(u, v)| {
            let i = self.graph.adj[u as usize].binary_search(&v).unwrap();
            (u, v, self.w[u as usize][i])
        })
    }

    pub fn total_weight(&self) -> u64 {
        self.edges().map(|(_, _, w)| w).sum()
    }

    /// True when no two edges carry the same weight.
    pub fn has_distinct_weights(&self) -> bool {
        let mut ws: Vec<u64> = self.edges().map(|(_, _, w)| w).collect();
        ws.sort_unstable();
        ws.windows(2).all(|p| p[0] != p[1])
    }
}
