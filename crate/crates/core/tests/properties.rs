//! Property tests: randomized structural invariants that complement the
//! fixed-seed acceptance batch.

use proptest::prelude::*;

use sssp_core::{
    bellman_ford_oracle, check_delta_po, check_fo, dijkstra_float_via_int, distances_agree,
    generate_random, BinaryHeapQueue, DeltaAdapter, DialBucketQueue, Graph, MonotoneIntQueue,
    QueueKind, RadixHeap, TieBreak, TwoLevelBucketQueue,
};

/// One long random monotone-respecting run per queue: extraction keys
/// must come out nondecreasing over 10_000 operations.
#[test]
fn long_run_extractions_are_nondecreasing() {
    const SPAN: u64 = 1000;
    let queues: Vec<Box<dyn MonotoneIntQueue>> = vec![
        Box::new(BinaryHeapQueue::new(TieBreak::Fifo)),
        Box::new(DialBucketQueue::new(SPAN, TieBreak::Fifo).unwrap()),
        Box::new(RadixHeap::new(SPAN, TieBreak::Fifo).unwrap()),
        Box::new(TwoLevelBucketQueue::new(SPAN, 32, TieBreak::Fifo).unwrap()),
    ];
    for mut q in queues {
        let mut state = 0x5eed_u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut live: Vec<(usize, u64)> = Vec::new();
        let mut last = 0u64;
        let mut prev: Option<u64> = None;
        let mut next_id = 0usize;
        for _ in 0..10_000 {
            match rng() % 4 {
                0 | 1 => {
                    let key = last + rng() % (SPAN + 1);
                    q.insert(next_id, key, 0).unwrap();
                    live.push((next_id, key));
                    next_id += 1;
                }
                2 if !live.is_empty() => {
                    let i = (rng() as usize) % live.len();
                    let (id, key) = live[i];
                    let new_key = last + rng() % (key - last + 1);
                    q.decrease_key(id, new_key, 0).unwrap();
                    live[i].1 = new_key;
                }
                _ => {
                    if let Some((id, key)) = q.extract_min() {
                        if let Some(p) = prev {
                            assert!(key >= p, "extraction keys decreased: {key} < {p}");
                        }
                        prev = Some(key);
                        last = key;
                        live.retain(|&(l, _)| l != id);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A full ordering is always a delta partial ordering for any positive delta.
    #[test]
    fn fo_implies_delta_po(
        mut keys in proptest::collection::vec(0.0f64..100.0, 1..40),
        delta in 0.001f64..10.0,
    ) {
        keys.sort_by(f64::total_cmp);
        let trace: Vec<(usize, f64)> = keys.iter().copied().enumerate().collect();
        prop_assert!(check_fo(&trace));
        prop_assert!(check_delta_po(&trace, delta));
    }

    /// Text round trip preserves the graph exactly.
    #[test]
    fn dimacs_round_trip(
        n in 2usize..40,
        m in 0usize..120,
        seed in any::<u64>(),
    ) {
        let g = generate_random(n, m, 0.25, 8.0, seed).unwrap();
        let text = g.to_dimacs();
        let back = Graph::parse_dimacs(&text).unwrap();
        prop_assert_eq!(g.node_count(), back.node_count());
        let a: Vec<_> = g.edges().collect();
        let b: Vec<_> = back.edges().collect();
        prop_assert_eq!(a, b);
    }

    /// The adapter never yields a key more than delta below a live key:
    /// whatever it extracts, every key still stored is > extracted - delta.
    #[test]
    fn adapter_extracts_within_delta_window(
        ops in proptest::collection::vec((0.0f64..64.0, any::<bool>()), 1..60),
        delta in 0.5f64..4.0,
    ) {
        let inner = DialBucketQueue::new(200, TieBreak::Fifo).unwrap();
        let mut adapter = DeltaAdapter::new(Box::new(inner), delta).unwrap();
        let mut live: Vec<(usize, f64)> = Vec::new();
        let mut floor = 0.0f64;
        let mut next_id = 0usize;
        for (raw, do_extract) in ops {
            if do_extract {
                if let Some((id, d)) = adapter.extract() {
                    live.retain(|&(l, _)| l != id);
                    for &(_, other) in &live {
                        prop_assert!(other > d - delta);
                    }
                    floor = floor.max(d);
                }
            } else {
                let d = floor + raw % (delta * 40.0);
                if live.iter().all(|&(_, k)| k != d) {
                    let replace = live.iter().position(|&(_, k)| k > d);
                    match replace {
                        Some(i) if (raw as u64).is_multiple_of(2) => {
                            let id = live[i].0;
                            adapter.update(id, d).unwrap();
                            live[i].1 = d;
                        }
                        _ => {
                            adapter.update(next_id, d).unwrap();
                            live.push((next_id, d));
                            next_id += 1;
                        }
                    }
                }
            }
        }
    }

    /// All adapter-backed solvers agree with the oracle on random graphs.
    #[test]
    fn solvers_agree_with_oracle(
        n in 1usize..64,
        m in 0usize..256,
        seed in any::<u64>(),
        ratio_ix in 0usize..3,
    ) {
        let delta = 8.0 * [1.0, 0.1, 0.001][ratio_ix];
        let g = generate_random(n, m, delta, 8.0, seed).unwrap();
        let oracle = bellman_ford_oracle(&g, 0).unwrap();
        for kind in [
            QueueKind::DialViaAdapter,
            QueueKind::RadixViaAdapter,
            QueueKind::TwoLevelViaAdapter { b: 16 },
            QueueKind::BinaryHeapViaAdapter,
        ] {
            let run = dijkstra_float_via_int(&g, 0, kind, None).unwrap();
            for v in 0..g.node_count() {
                prop_assert!(distances_agree(run.result.dist[v], oracle.dist[v]));
            }
        }
    }
}
