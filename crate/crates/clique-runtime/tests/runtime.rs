use clique_runtime::{
    run_program, run_with_auxiliary, CliqueRuntime, Message, NodeProgram, RoundTrace,
    RuntimeConfig, RuntimeError, Word,
};

fn rt(n: usize) -> CliqueRuntime {
    CliqueRuntime::new(n, RuntimeConfig::default())
}

fn msg(src: u32, dst: u32, value: u64) -> Message {
    Message::new(src, dst, Word::new(value, 8))
}

#[test]
fn fresh_runtime_is_all_zeros() {
    let engine = rt(8);
    assert_eq!(engine.metrics(), RoundTrace::default());
    assert_eq!(engine.word_bits(), 4 * 3);
    assert_eq!(engine.load_limit(), 32);
}

#[test]
fn empty_direct_round_still_charges() {
    let mut engine = rt(4);
    let inboxes = engine.run_direct_round(vec![Vec::new(); 4]).unwrap();
    assert!(inboxes.iter().all(|b| b.is_empty()));
    let t = engine.metrics();
    assert_eq!(t.rounds_charged, 1);
    assert_eq!(t.total_words, 0);
}

#[test]
fn three_direct_rounds_charge_three() {
    let mut engine = rt(4);
    for _ in 0..3 {
        engine.run_direct_round(vec![Vec::new(); 4]).unwrap();
    }
    assert_eq!(engine.metrics().rounds_charged, 3);
}

#[test]
fn broadcast_round_delivers_everywhere() {
    let n = 6;
    let mut engine = rt(n);
    let mut outboxes = vec![Vec::new(); n];
    for dst in 0..n as u32 {
        outboxes[2].push(msg(2, dst, 0xAB));
    }
    let inboxes = engine.run_direct_round(outboxes).unwrap();
    for dst in 0..n {
        assert_eq!(inboxes[dst].len(), 1);
        assert_eq!(inboxes[dst][0].body.value, 0xAB);
    }
    // the self-message is free
    assert_eq!(engine.metrics().total_words, (n - 1) as u64);
    assert_eq!(engine.metrics().max_node_round_load, (n - 1) as u64);
}

#[test]
fn second_word_on_a_pair_is_rejected() {
    let mut engine = rt(4);
    let mut outboxes = vec![Vec::new(); 4];
    outboxes[1].push(msg(1, 3, 1));
    outboxes[1].push(msg(1, 3, 2));
    let err = engine.run_direct_round(outboxes).unwrap_err();
    assert_eq!(err, RuntimeError::PairCapacity { round: 0, src: 1, dst: 3 });
}

#[test]
fn repeated_self_messages_are_fine() {
    let mut engine = rt(4);
    let mut outboxes = vec![Vec::new(); 4];
    outboxes[2].push(msg(2, 2, 1));
    outboxes[2].push(msg(2, 2, 2));
    let inboxes = engine.run_direct_round(outboxes).unwrap();
    assert_eq!(inboxes[2].len(), 2);
    assert_eq!(engine.metrics().total_words, 0);
}

#[test]
fn oversized_word_is_rejected() {
    let mut engine = rt(8); // W = 12
    let mut outboxes = vec![Vec::new(); 8];
    outboxes[0].push(Message::new(0, 1, Word::new(0, 13)));
    let err = engine.run_direct_round(outboxes).unwrap_err();
    assert_eq!(err, RuntimeError::OversizedWord { bits: 13, limit: 12 });
}

#[test]
fn route_empty_batch_charges_constant() {
    let mut engine = rt(5);
    let inboxes = engine.lenzen_route(Vec::new()).unwrap();
    assert!(inboxes.iter().all(|b| b.is_empty()));
    assert_eq!(engine.metrics().rounds_charged, engine.c_route());
}

#[test]
fn route_all_to_node_zero() {
    let n = 10;
    let mut engine = rt(n);
    let batch: Vec<Message> = (0..n as u32).map(|v| msg(v, 0, v as u64)).collect();
    let inboxes = engine.lenzen_route(batch).unwrap();
    assert_eq!(inboxes[0].len(), n);
    assert_eq!(engine.metrics().total_words, (n - 1) as u64);
}

#[test]
fn route_source_overload_boundary() {
    let n = 4;
    let limit = 4 * n as u64;
    let mut engine = rt(n);
    // exactly at the cap: fine
    let at_cap: Vec<Message> = (0..limit).map(|i| msg(0, 1 + (i % 3) as u32, i % 200)).collect();
    engine.lenzen_route(at_cap).unwrap();
    // one more: source overload naming node 0
    let over: Vec<Message> = (0..=limit).map(|i| msg(0, 1 + (i % 3) as u32, i % 200)).collect();
    let err = engine.lenzen_route(over).unwrap_err();
    assert_eq!(err, RuntimeError::SourceOverload { node: 0, count: limit + 1, limit });
    assert!(err.to_string().contains("source overload(0)"));
}

#[test]
fn route_destination_overload() {
    let n = 4;
    let limit = 4 * n as u64;
    let mut engine = rt(n);
    let over: Vec<Message> = (0..=limit)
        .map(|i| msg(1 + (i % 3) as u32, 0, i % 200))
        .collect();
    let err = engine.lenzen_route(over).unwrap_err();
    assert!(matches!(err, RuntimeError::DestinationOverload { node: 0, .. }));
}

#[test]
fn bulk_accounting_matches_message_accounting() {
    let n = 8;
    let mut a = rt(n);
    let mut b = rt(n);
    let sends: Vec<(u32, u32)> = (1..n as u32).map(|v| (v, 0)).collect();
    a.direct_round_bulk(sends.iter().copied()).unwrap();
    let outboxes: Vec<Vec<Message>> = (0..n as u32)
        .map(|v| if v == 0 { Vec::new() } else { vec![msg(v, 0, 7)] })
        .collect();
    b.run_direct_round(outboxes).unwrap();
    assert_eq!(a.metrics().rounds_charged, b.metrics().rounds_charged);
    assert_eq!(a.metrics().total_words, b.metrics().total_words);
    assert_eq!(a.metrics().max_node_round_load, b.metrics().max_node_round_load);

    let mut c = rt(n);
    c.lenzen_route_bulk([(0, 1, 5u64), (2, 1, 3)]).unwrap();
    assert_eq!(c.metrics().rounds_charged, c.c_route());
    assert_eq!(c.metrics().total_words, 8);
    assert_eq!(c.metrics().max_node_round_load, 8);
}

#[test]
fn bulk_route_overload_is_caught() {
    let n = 4;
    let mut engine = rt(n);
    let err = engine.lenzen_route_bulk([(0u32, 1u32, 17u64)]).unwrap_err();
    assert!(matches!(err, RuntimeError::SourceOverload { node: 0, count: 17, limit: 16 }));
}

#[test]
fn phase_attribution_and_round_scale() {
    let mut engine = rt(4);
    engine.set_phase("alpha");
    engine.run_direct_round(vec![Vec::new(); 4]).unwrap();
    engine.set_phase("beta");
    engine.set_round_scale(9);
    engine.lenzen_route(Vec::new()).unwrap();
    let t = engine.metrics();
    assert_eq!(t.per_phase["alpha"].rounds, 1);
    assert_eq!(t.per_phase["beta"].rounds, 9 * engine.c_route());
    assert_eq!(t.rounds_charged, 1 + 9 * engine.c_route());
}

#[test]
fn trace_survives_json_round_trip() {
    let mut engine = rt(4);
    engine.set_phase("p");
    let mut outboxes = vec![Vec::new(); 4];
    outboxes[0].push(msg(0, 1, 3));
    engine.run_direct_round(outboxes).unwrap();
    let t = engine.metrics();
    let back: RoundTrace = serde_json::from_str(&t.to_json()).unwrap();
    assert_eq!(back, t);
}

// --- node-program driver ---------------------------------------------------

/// Forwards a counter around a ring; node 0 injects, everyone relays.
struct RingRelay {
    id: u32,
    n: u32,
    seen: Vec<u64>,
}

impl NodeProgram for RingRelay {
    fn step(&mut self, round: u64, inbox: &[Message]) -> Vec<Message> {
        for m in inbox {
            self.seen.push(m.body.value);
        }
        let next = (self.id + 1) % self.n;
        if round == 0 && self.id == 0 {
            vec![Message::new(self.id, next, Word::new(1, 8))]
        } else if let Some(m) = inbox.first() {
            vec![Message::new(self.id, next, Word::new(m.body.value + 1, 8))]
        } else {
            Vec::new()
        }
    }
}

fn ring(n: u32) -> Vec<Box<dyn NodeProgram>> {
    (0..n)
        .map(|id| Box::new(RingRelay { id, n, seen: Vec::new() }) as Box<dyn NodeProgram>)
        .collect()
}

#[test]
fn program_driver_runs_a_ring() {
    let n = 5;
    let mut engine = rt(n as usize);
    let mut progs = ring(n);
    let finals = run_program(&mut engine, &mut progs, n as u64).unwrap();
    // after n rounds the token is back at node 0 with value n
    assert_eq!(finals[0].len(), 1);
    assert_eq!(finals[0][0].body.value, n as u64);
    assert_eq!(engine.metrics().rounds_charged, n as u64);
}

#[test]
fn program_driver_is_deterministic() {
    let run = || {
        let mut engine = rt(5);
        let mut progs = ring(5);
        run_program(&mut engine, &mut progs, 5).unwrap();
        engine.metrics().to_json()
    };
    assert_eq!(run(), run());
}

// --- auxiliary-node schedule ------------------------------------------------

#[test]
fn scale_one_schedule_is_identity() {
    let n = 5;
    let mut direct = rt(n as usize);
    let mut scaled = rt(n as usize);
    let directly = run_program(&mut direct, &mut ring(n), 5).unwrap();
    let via_aux =
        run_with_auxiliary(&mut scaled, 1, &mut ring(n), &vec![true; n as usize], 5).unwrap();
    assert_eq!(directly, via_aux);
    assert_eq!(direct.metrics().rounds_charged, scaled.metrics().rounds_charged);
}

#[test]
fn scale_two_round_costs_four_and_matches_flat_replay() {
    // every logical node (auxiliaries included) sends one word clockwise
    let n = 4u32;
    let m = 2 * n;
    let mut engine = rt(n as usize);
    let mut progs = ring(m);
    let mut flags = vec![false; m as usize];
    for f in flags.iter_mut().take(n as usize) {
        *f = true;
    }
    let inboxes = run_with_auxiliary(&mut engine, 2, &mut progs, &flags, m as u64).unwrap();
    // reference execution on a genuinely larger clique
    let mut flat = rt(m as usize);
    let flat_inboxes = run_program(&mut flat, &mut ring(m), m as u64).unwrap();
    assert_eq!(inboxes, flat_inboxes);
    // each logical round costs c^2 = 4 physical rounds
    assert_eq!(engine.metrics().rounds_charged, 4 * m as u64);
}

#[test]
fn seeded_auxiliary_is_rejected() {
    let n = 4;
    let mut engine = rt(n);
    let mut flags = vec![false; 2 * n];
    flags[n + 1] = true;
    let err =
        run_with_auxiliary(&mut engine, 2, &mut ring(2 * n as u32), &flags, 1).unwrap_err();
    assert_eq!(err, RuntimeError::AuxiliaryHasInput(n as u32 + 1));
}
