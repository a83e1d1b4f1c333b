use std::collections::HashSet;

use thiserror::Error;

use crate::trace::RoundTrace;
use crate::word::Message;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuntimeError {
    #[error("round {round}: pair capacity exceeded for {src} -> {dst}")]
    PairCapacity { round: u64, src: u32, dst: u32 },
    #[error("word of {bits} bits exceeds the {limit}-bit width")]
    OversizedWord { bits: u32, limit: u32 },
    #[error("source overload({node}): {count} words, limit {limit}")]
    SourceOverload { node: u32, count: u64, limit: u64 },
    #[error("destination overload({node}): {count} words, limit {limit}")]
    DestinationOverload { node: u32, count: u64, limit: u64 },
    #[error("node id {0} out of range for {1} nodes")]
    NodeOutOfRange(u32, usize),
    #[error("auxiliary node {0} was seeded with input-graph knowledge")]
    AuxiliaryHasInput(u32),
}

#[derive(Debug, Clone, Copy)]
pub struct RuntimeConfig {
    /// Word width factor: W = c_w * ceil(log2 n) bits.
    pub c_w: u32,
    /// Routing load factor: each node may source/sink at most c_l * n words
    /// per routed batch.
    pub c_l: u64,
    /// Rounds charged per routing invocation.
    pub c_route: u64,
}

impl Default for RuntimeConfig {
    fn default() -> Self {
        RuntimeConfig { c_w: 4, c_l: 4, c_route: 2 }
    }
}

/// One congested-clique simulation instance. Single-owner: one simulation
/// per engine.
pub struct CliqueRuntime {
    n: usize,
    config: RuntimeConfig,
    word_bits: u32,
    trace: RoundTrace,
    phase: String,
    round_scale: u64,
    sent: Vec<u64>,
    recv: Vec<u64>,
}

impl CliqueRuntime {
    pub fn new(n: usize, config: RuntimeConfig) -> CliqueRuntime {
        let log = 64 - (n.max(2) as u64 - 1).leading_zeros(); // ceil(log2 n)
        CliqueRuntime {
            n,
            config,
            word_bits: config.c_w * log,
            trace: RoundTrace::default(),
            phase: "init".to_string(),
            round_scale: 1,
            sent: vec![0; n],
            recv: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word_bits(&self) -> u32 {
        self.word_bits
    }

    pub fn load_limit(&self) -> u64 {
        self.config.c_l * self.n as u64
    }

    pub fn c_route(&self) -> u64 {
        self.config.c_route
    }

    pub fn set_phase(&mut self, name: &str) {
        self.phase = name.to_string();
    }

    /// Multiplies subsequent round charges; used while simulating auxiliary
    /// or proxy nodes per the c^2-round schedule.
    pub fn set_round_scale(&mut self, scale: u64) {
        self.round_scale = scale.max(1);
    }

    pub fn metrics(&self) -> RoundTrace {
        self.trace.clone()
    }

    fn check_word(&self, bits: u32) -> Result<(), RuntimeError> {
        if bits > self.word_bits {
            return Err(RuntimeError::OversizedWord { bits, limit: self.word_bits });
        }
        Ok(())
    }

    fn check_node(&self, v: u32) -> Result<(), RuntimeError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(RuntimeError::NodeOutOfRange(v, self.n))
        }
    }

    fn reset_loads(&mut self) {
        self.sent.iter_mut().for_each(|c| *c = 0);
        self.recv.iter_mut().for_each(|c| *c = 0);
    }

    fn fold_max_load(&mut self) {
        let m = self
            .sent
            .iter()
            .chain(self.recv.iter())
            .copied()
            .max()
            .unwrap_or(0);
        if m > self.trace.max_node_round_load {
            self.trace.max_node_round_load = m;
        }
    }

    /// One direct round: at most one word per ordered pair. Self-messages
    /// are free and uncounted. Returns per-node inboxes.
    pub fn run_direct_round(
        &mut self,
        outboxes: Vec<Vec<Message>>,
    ) -> Result<Vec<Vec<Message>>, RuntimeError> {
        let round = self.trace.rounds_charged;
        let mut inboxes: Vec<Vec<Message>> = vec![Vec::new(); self.n];
        let mut pairs: HashSet<(u32, u32)> = HashSet::new();
        self.reset_loads();
        let mut words = 0u64;
        let mut bits = 0u64;
        for (src, outbox) in outboxes.into_iter().enumerate() {
            for msg in outbox {
                self.check_node(msg.src)?;
                self.check_node(msg.dst)?;
                debug_assert_eq!(msg.src as usize, src);
                self.check_word(msg.body.bits)?;
                if msg.src != msg.dst {
                    if !pairs.insert((msg.src, msg.dst)) {
                        return Err(RuntimeError::PairCapacity { round, src: msg.src, dst: msg.dst });
                    }
                    self.sent[msg.src as usize] += 1;
                    self.recv[msg.dst as usize] += 1;
                    words += 1;
                    bits += msg.body.bits as u64;
                }
                inboxes[msg.dst as usize].push(msg);
            }
        }
        self.trace.charge_rounds(&self.phase.clone(), self.round_scale);
        self.trace.charge_words(&self.phase.clone(), words, bits);
        self.fold_max_load();
        Ok(inboxes)
    }

    /// Accounting-only direct round: each `(src, dst)` pair carries one word
    /// of full width. Payload movement is the caller's business.
    pub fn direct_round_bulk(
        &mut self,
        sends: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<(), RuntimeError> {
        let round = self.trace.rounds_charged;
        let mut pairs: HashSet<(u32, u32)> = HashSet::new();
        self.reset_loads();
        let mut words = 0u64;
        for (src, dst) in sends {
            self.check_node(src)?;
            self.check_node(dst)?;
            if src == dst {
                continue;
            }
            if !pairs.insert((src, dst)) {
                return Err(RuntimeError::PairCapacity { round, src, dst });
            }
            self.sent[src as usize] += 1;
            self.recv[dst as usize] += 1;
            words += 1;
        }
        self.trace.charge_rounds(&self.phase.clone(), self.round_scale);
        self.trace
            .charge_words(&self.phase.clone(), words, words * self.word_bits as u64);
        self.fold_max_load();
        Ok(())
    }

    /// One direct round where each listed sender pushes one word to every
    /// other node. Pair-uniqueness holds by construction, so this skips the
    /// per-pair bookkeeping of `direct_round_bulk`.
    pub fn broadcast_round(
        &mut self,
        senders: impl IntoIterator<Item = u32>,
    ) -> Result<(), RuntimeError> {
        self.reset_loads();
        let mut is_sender = vec![false; self.n];
        let mut count = 0u64;
        for src in senders {
            self.check_node(src)?;
            if !is_sender[src as usize] {
                is_sender[src as usize] = true;
                self.sent[src as usize] = self.n as u64 - 1;
                count += 1;
            }
        }
        for v in 0..self.n {
            self.recv[v] = count - is_sender[v] as u64;
        }
        let words = count * (self.n as u64 - 1);
        self.trace.charge_rounds(&self.phase.clone(), self.round_scale);
        self.trace
            .charge_words(&self.phase.clone(), words, words * self.word_bits as u64);
        self.fold_max_load();
        Ok(())
    }

    /// Routing primitive per the black-box contract: validates that every
    /// node sources and sinks at most c_l * n words, charges c_route rounds,
    /// and delivers everything. Internals of the routing schedule are not
    /// simulated.
    pub fn lenzen_route(
        &mut self,
        batch: Vec<Message>,
    ) -> Result<Vec<Vec<Message>>, RuntimeError> {
        self.reset_loads();
        let limit = self.load_limit();
        let mut words = 0u64;
        let mut bits = 0u64;
        for msg in &batch {
            self.check_node(msg.src)?;
            self.check_node(msg.dst)?;
            self.check_word(msg.body.bits)?;
            if msg.src == msg.dst {
                continue;
            }
            self.sent[msg.src as usize] += 1;
            self.recv[msg.dst as usize] += 1;
            words += 1;
            bits += msg.body.bits as u64;
        }
        self.check_route_loads(limit)?;
        let mut inboxes: Vec<Vec<Message>> = vec![Vec::new(); self.n];
        for msg in batch {
            inboxes[msg.dst as usize].push(msg);
        }
        self.trace
            .charge_rounds(&self.phase.clone(), self.config.c_route * self.round_scale);
        self.trace.charge_words(&self.phase.clone(), words, bits);
        self.fold_max_load();
        Ok(inboxes)
    }

    /// Accounting-only routed batch: `(src, dst, words)` triples.
    pub fn lenzen_route_bulk(
        &mut self,
        loads: impl IntoIterator<Item = (u32, u32, u64)>,
    ) -> Result<(), RuntimeError> {
        self.reset_loads();
        let limit = self.load_limit();
        let mut words = 0u64;
        for (src, dst, w) in loads {
            self.check_node(src)?;
            self.check_node(dst)?;
            if src == dst {
                continue;
            }
            self.sent[src as usize] += w;
            self.recv[dst as usize] += w;
            words += w;
        }
        self.check_route_loads(limit)?;
        self.trace
            .charge_rounds(&self.phase.clone(), self.config.c_route * self.round_scale);
        self.trace
            .charge_words(&self.phase.clone(), words, words * self.word_bits as u64);
        self.fold_max_load();
        Ok(())
    }

    /// Accounting-only routed batch given as per-node aggregate loads.
    /// Sent and received totals must agree (every word has both ends).
    pub fn lenzen_route_loads(
        &mut self,
        sent: &[u64],
        recv: &[u64],
    ) -> Result<(), RuntimeError> {
        assert_eq!(sent.len(), self.n);
        assert_eq!(recv.len(), self.n);
        let words: u64 = sent.iter().sum();
        assert_eq!(words, recv.iter().sum::<u64>(), "send/receive totals must match");
        self.sent.copy_from_slice(sent);
        self.recv.copy_from_slice(recv);
        self.check_route_loads(self.load_limit())?;
        self.trace
            .charge_rounds(&self.phase.clone(), self.config.c_route * self.round_scale);
        self.trace
            .charge_words(&self.phase.clone(), words, words * self.word_bits as u64);
        self.fold_max_load();
        Ok(())
    }

    fn check_route_loads(&self, limit: u64) -> Result<(), RuntimeError> {
        for v in 0..self.n {
            if self.sent[v] > limit {
                return Err(RuntimeError::SourceOverload { node: v as u32, count: self.sent[v], limit });
            }
            if self.recv[v] > limit {
                return Err(RuntimeError::DestinationOverload { node: v as u32, count: self.recv[v], limit });
            }
        }
        Ok(())
    }
}
