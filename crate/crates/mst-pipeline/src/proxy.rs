use clique_runtime::CliqueRuntime;
use graph_core::NodeId;

use crate::error::PipelineError;
use crate::instances::NestedInstances;

/// Which physical node stands in for node j within each parallel instance.
/// Node j gets ceil(d_j / m) proxies, handed out in ascending degree order;
/// each proxy covers a contiguous block of min(m, ceil(n / d_j)) instances.
/// Proxy ids map onto physical nodes round-robin.
#[derive(Debug, Clone)]
pub struct ProxyMap {
    pub n: usize,
    pub m: usize,
    /// proxies_of[j] = global proxy ids serving node j, in instance order.
    pub proxies_of: Vec<Vec<u32>>,
    /// Instances covered by each of node j's proxies.
    pub span: Vec<usize>,
    pub total: usize,
}

impl ProxyMap {
    /// Global proxy id simulating `node` in `instance`.
    pub fn proxy_for(&self, instance: usize, node: NodeId) -> u32 {
        let list = &self.proxies_of[node as usize];
        list[(instance / self.span[node as usize]).min(list.len() - 1)]
    }

    /// Physical node carrying a given proxy.
    pub fn phys(&self, proxy: u32) -> u32 {
        proxy % self.n as u32
    }

    pub fn phys_for(&self, instance: usize, node: NodeId) -> u32 {
        self.phys(self.proxy_for(instance, node))
    }
}

/// Hands out proxies by ascending degree after one broadcast round makes
/// all degrees common knowledge.
pub fn assign_proxies(
    rt: &mut CliqueRuntime,
    degrees: &[usize],
    m: usize,
    cap: usize,
) -> Result<ProxyMap, PipelineError> {
    let n = degrees.len();
    assert!(m >= 1 && m <= n);
    rt.set_phase("proxy");
    rt.broadcast_round(0..n as u32)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&j| (degrees[j], j));

    let mut proxies_of = vec![Vec::new(); n];
    let mut span = vec![m; n];
    let mut next = 0u32;
    for j in order {
        let d = degrees[j].max(1);
        let count = (d + m - 1) / m;
        let per = m.min((n + d - 1) / d);
        assert!(count * per >= m, "proxies must cover every instance");
        proxies_of[j] = (next..next + count as u32).collect();
        span[j] = per;
        next += count as u32;
    }
    let total = next as usize;
    if total > cap {
        return Err(PipelineError::ProxyOverflow { count: total, cap });
    }
    Ok(ProxyMap { n, m, proxies_of, span, total })
}

/// Per-proxy copy of its node's incident-edge table (neighbor,
/// first-instance index).
#[derive(Debug)]
pub struct ProxyTables {
    /// Indexed by global proxy id.
    pub tables: Vec<Vec<(NodeId, u32)>>,
}

/// Two routed stages prime every proxy with its node's full table: first
/// each node splits its table into equal chunks, one per proxy; then the
/// proxies of a node exchange chunks all-to-all.
pub fn distribute_neighbor_tables(
    rt: &mut CliqueRuntime,
    inst: &NestedInstances,
    map: &ProxyMap,
) -> Result<ProxyTables, PipelineError> {
    let n = inst.n;
    let mut full: Vec<Vec<(NodeId, u32)>> = vec![Vec::new(); n];
    for (idx, &(u, v, _)) in inst.edges.iter().enumerate() {
        let g = inst.group_of(idx) as u32;
        full[u as usize].push((v, g));
        full[v as usize].push((u, g));
    }

    rt.set_phase("proxy");
    let mut sent1 = vec![0u64; n];
    let mut recv1 = vec![0u64; n];
    let mut sent2 = vec![0u64; n];
    let mut recv2 = vec![0u64; n];
    let mut tables: Vec<Vec<(NodeId, u32)>> = vec![Vec::new(); map.total];
    for j in 0..n {
        let proxies = &map.proxies_of[j];
        let l = proxies.len();
        let d = full[j].len();
        sent1[j] += d as u64;
        for (c, &p) in proxies.iter().enumerate() {
            // stage-1 chunk: every l-th entry starting at c
            let chunk = full[j].iter().skip(c).step_by(l).count();
            recv1[map.phys(p) as usize] += chunk as u64;
            sent2[map.phys(p) as usize] += (chunk * (l - 1)) as u64;
            recv2[map.phys(p) as usize] += (d - chunk) as u64;
            tables[p as usize] = full[j].clone();
        }
    }
    rt.lenzen_route_loads(&sent1, &recv1)?;
    rt.lenzen_route_loads(&sent2, &recv2)?;
    Ok(ProxyTables { tables })
}
