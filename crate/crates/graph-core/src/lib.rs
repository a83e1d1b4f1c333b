//! Graph data model, sequential oracles and combinatorial utilities shared by
//! the clique simulation crates.

mod almost_partition;
mod dsu;
mod error;
mod gen;
mod graph;
mod io;
mod oracle;
mod partition;

pub use almost_partition::almost_partition_tree;
pub use dsu::DisjointSets;
pub use error::GraphError;
pub use gen::{gen_gnp, gen_path, gen_planted, gen_weights, random_tree};
pub use graph::{Graph, NodeId, WeightedGraph};
pub use io::{parse_graph_text, parse_weighted_graph_text, write_graph_text, write_weighted_graph_text};
pub use oracle::{oracle_components, oracle_mst, oracle_mst_weight};
pub use partition::{complete_partition, merge_cc_solutions, Partition, SpanningForest};

/// Deterministic 64-bit mixer (splitmix64 finalizer). Used to derive
/// independent sub-seeds and hash values from a single run seed.
#[inline]
pub fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Derives a sub-seed from a base seed and a tag.
#[inline]
pub fn subseed(seed: u64, tag: u64) -> u64 {
    mix64(seed ^ mix64(tag))
}
