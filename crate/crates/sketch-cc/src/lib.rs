//! Linear l0 sketches over signed incident-edge vectors plus a
//! Boruvka-style merge engine that finishes a partition with few active
//! components into the complete partition, in a fixed communication
//! schedule; supports many simultaneous instances.

mod gp;
mod sketch;

pub use gp::{
    active_cap, gp_reduce, gp_reduce_batch, gp_reduce_batch_capped, GpError, GP_BUDGET,
    SLOT_BATCHES,
};
pub use sketch::{
    build_node_sketch, edge_token, merge, sample_outgoing, token_edge, Cell, L0Sketch,
    SketchParams,
};
