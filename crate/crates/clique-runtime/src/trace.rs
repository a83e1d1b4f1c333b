use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseStats {
    pub rounds: u64,
    pub words: u64,
}

/// Cumulative round-cost ledger. Counters only ever grow.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTrace {
    pub rounds_charged: u64,
    pub total_words: u64,
    pub total_bits: u64,
    pub max_node_round_load: u64,
    pub per_phase: BTreeMap<String, PhaseStats>,
}

impl RoundTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub(crate) fn charge_rounds(&mut self, phase: &str, rounds: u64) {
        self.rounds_charged += rounds;
        self.per_phase.entry(phase.to_string()).or_default().rounds += rounds;
    }

    pub(crate) fn charge_words(&mut self, phase: &str, words: u64, bits: u64) {
        self.total_words += words;
        self.total_bits += bits;
        self.per_phase.entry(phase.to_string()).or_default().words += words;
    }
}
