use size_reduce::{default_sample_count, default_sample_prob, small_threshold};

/// Every knob of the pipeline in one place, derived from n by the same
/// rounding rules the stage crates use.
#[derive(Debug, Clone, Copy)]
pub struct PipelineParams {
    /// Degree threshold for the two-stage split: max(2, floor(log2 log2 n)).
    pub s_sparsify: u32,
    /// Size below which components count as small: floor(sqrt(log2 n)).
    pub s_small: usize,
    /// Instance count and per-run sample count: floor(sqrt(n)).
    pub m: usize,
    /// Edge inclusion probability per sample.
    pub p_sample: f64,
    /// Leader election probability.
    pub p_leader: f64,
    /// Edge sampling probability for the two-phase reduction: min(1, 4/sqrt(n)).
    pub q_kkt: f64,
    /// Hard cap on any single pipeline instance's edge count: 8 n^{3/2}.
    pub edge_cap: u64,
    /// Hard cap on total proxies: 6n (auxiliary-node scale 6).
    pub proxy_cap: usize,
    /// Round multiplier while simulating the proxy layer (6^2 sub-rounds
    /// per logical round).
    pub aux_scale: u64,
    pub seed: u64,
}

impl PipelineParams {
    pub fn for_n(n: usize, seed: u64) -> PipelineParams {
        assert!(n >= 2, "pipeline needs at least two nodes");
        let ll = (n.max(4) as f64).log2().log2().floor() as u32;
        let root = (n as f64).sqrt();
        PipelineParams {
            s_sparsify: ll.max(2),
            s_small: small_threshold(n),
            m: default_sample_count(n),
            p_sample: default_sample_prob(n),
            p_leader: default_sample_prob(n),
            q_kkt: (4.0 / root).min(1.0),
            edge_cap: (8.0 * root * n as f64) as u64,
            proxy_cap: 6 * n,
            aux_scale: 36,
            seed,
        }
    }
}
