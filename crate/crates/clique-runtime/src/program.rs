use std::collections::HashSet;

use crate::runtime::{CliqueRuntime, RuntimeError};
use crate::word::Message;

/// Per-node program: `step` sees only the node's own state and inbox.
pub trait NodeProgram {
    fn step(&mut self, round: u64, inbox: &[Message]) -> Vec<Message>;
}

/// Runs `rounds` synchronous direct rounds of one program per node.
/// Returns the inboxes delivered in the final round.
pub fn run_program(
    rt: &mut CliqueRuntime,
    programs: &mut [Box<dyn NodeProgram>],
    rounds: u64,
) -> Result<Vec<Vec<Message>>, RuntimeError> {
    assert_eq!(programs.len(), rt.n(), "one program per node");
    let mut inboxes: Vec<Vec<Message>> = vec![Vec::new(); rt.n()];
    for r in 0..rounds {
        let mut outboxes: Vec<Vec<Message>> = Vec::with_capacity(rt.n());
        for (v, prog) in programs.iter_mut().enumerate() {
            let inbox = std::mem::take(&mut inboxes[v]);
            outboxes.push(prog.step(r, &inbox));
        }
        inboxes = rt.run_direct_round(outboxes)?;
    }
    Ok(inboxes)
}

/// Simulates a clique of `c * n` logical nodes on the `n` physical nodes of
/// `rt`. Logical node `e` lives on physical node `e % n` in slot `e / n`;
/// slots `1..c` are auxiliary. Each logical round runs as a fixed schedule
/// of `c * c` physical sub-rounds, one per (source slot, destination slot)
/// pair, so each sub-round moves at most one word per ordered physical
/// pair. With `c = 1` the schedule is the identity.
///
/// `input_flags[e]` marks logical nodes holding input-graph knowledge at
/// start; auxiliary nodes must start with none.
pub fn run_with_auxiliary(
    rt: &mut CliqueRuntime,
    c: usize,
    programs: &mut [Box<dyn NodeProgram>],
    input_flags: &[bool],
    rounds: u64,
) -> Result<Vec<Vec<Message>>, RuntimeError> {
    let n = rt.n();
    let m = c * n;
    assert!(c >= 1, "scale factor must be positive");
    assert_eq!(programs.len(), m, "one program per logical node");
    assert_eq!(input_flags.len(), m);
    for e in n..m {
        if input_flags[e] {
            return Err(RuntimeError::AuxiliaryHasInput(e as u32));
        }
    }

    let mut inboxes: Vec<Vec<Message>> = vec![Vec::new(); m];
    for r in 0..rounds {
        // One logical round's traffic, bucketed by (source slot, dest slot).
        let mut buckets: Vec<Vec<Message>> = vec![Vec::new(); c * c];
        let mut pairs: HashSet<(u32, u32)> = HashSet::new();
        for e in 0..m {
            let inbox = std::mem::take(&mut inboxes[e]);
            for msg in programs[e].step(r, &inbox) {
                if msg.src as usize >= m || msg.dst as usize >= m {
                    return Err(RuntimeError::NodeOutOfRange(msg.src.max(msg.dst), m));
                }
                debug_assert_eq!(msg.src as usize, e);
                if msg.src != msg.dst && !pairs.insert((msg.src, msg.dst)) {
                    return Err(RuntimeError::PairCapacity {
                        round: r,
                        src: msg.src,
                        dst: msg.dst,
                    });
                }
                let slot = (msg.src as usize / n) * c + msg.dst as usize / n;
                buckets[slot].push(msg);
            }
        }
        // Every sub-round of the schedule runs, loaded or not.
        for bucket in buckets {
            let mut phys: Vec<Vec<Message>> = vec![Vec::new(); n];
            for msg in &bucket {
                let src = msg.src % n as u32;
                phys[src as usize].push(Message::new(src, msg.dst % n as u32, msg.body));
            }
            rt.run_direct_round(phys)?;
            for msg in bucket {
                inboxes[msg.dst as usize].push(msg);
            }
        }
    }
    Ok(inboxes)
}
