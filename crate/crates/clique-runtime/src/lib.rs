//! Synchronous round engine for the congested clique: direct rounds with a
//! one-word-per-ordered-pair cap, constant-round routing with enforced O(n)
//! per-node load preconditions, auxiliary-node simulation, and a
//! round/message/bit accounting ledger.

mod program;
mod runtime;
mod trace;
mod word;

pub use program::{run_program, run_with_auxiliary, NodeProgram};
pub use runtime::{CliqueRuntime, RuntimeConfig, RuntimeError};
pub use trace::{PhaseStats, RoundTrace};
pub use word::{bits_for, words_for_bits, Message, Word};
