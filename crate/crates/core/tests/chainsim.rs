use hqarch::chainsim::{ends_exchanged, run_prefix, trace, trace_csv};
use hqarch::{make_schedule, make_sequential_schedule, run_chain, ChainState, PhysicsParams};
use proptest::prelude::*;

/// Where the payload starting at 1-based position `start` sits after `steps`
/// steps of the odd/even schedule on `n2` qubits, tracked one payload at a time.
fn oracle_position(n2: usize, start: usize, steps: usize) -> usize {
    let mut pos = start;
    for k in 1..=steps {
        let odd_step = k % 2 == 1;
        let pos_is_odd = pos % 2 == 1;
        if odd_step == pos_is_odd {
            // Left end of a pair (1,2), (3,4)... on odd steps, (2,3), (4,5)... on even steps.
            if pos < n2 && (odd_step || pos >= 2) {
                pos += 1;
            }
        } else if pos > 1 && (odd_step || pos < n2) {
            pos -= 1;
        }
    }
    pos
}

fn oracle_run<T: Clone>(payloads: &[T], steps: usize) -> Vec<T> {
    let n2 = payloads.len();
    let mut out = payloads.to_vec();
    for (i, p) in payloads.iter().enumerate() {
        out[oracle_position(n2, i + 1, steps) - 1] = p.clone();
    }
    out
}

fn even_len() -> impl Strategy<Value = usize> {
    (1usize..=10).prop_map(|n| 2 * n)
}

fn labels() -> impl Strategy<Value = Vec<u64>> {
    even_len().prop_flat_map(|n2| prop::collection::vec(any::<u64>(), n2))
}

#[test]
fn oracle_is_a_permutation() {
    for n2 in (2..=20).step_by(2) {
        for steps in 0..2 * n2 {
            let mut seen: Vec<usize> = (1..=n2).map(|s| oracle_position(n2, s, steps)).collect();
            seen.sort_unstable();
            assert_eq!(seen, (1..=n2).collect::<Vec<_>>(), "n2={n2} steps={steps}");
        }
    }
}

#[test]
fn exchange_needs_every_step() {
    for n2 in (4..=20).step_by(2) {
        let s = ChainState::labeled(n2).unwrap();
        let sched = make_schedule(n2).unwrap();
        assert_eq!(sched.len(), n2 - 1);
        for k in 0..sched.len() {
            let partial = run_prefix(&s, &sched, k).unwrap();
            assert!(!ends_exchanged(&s, &partial), "n2={n2} exchanged after {k}");
        }
        assert!(ends_exchanged(&s, &run_chain(&s, &sched).unwrap()));
    }
}

#[test]
fn six_qubit_final_permutation() {
    let s = ChainState::labeled(6).unwrap();
    let out = run_chain(&s, &make_schedule(6).unwrap()).unwrap();
    assert_eq!(out.payloads(), oracle_run(s.payloads(), 5).as_slice());
    assert_eq!(out.payloads(), &[6, 4, 5, 2, 3, 1]);
}

#[test]
fn trace_has_one_block_per_step() {
    let s = ChainState::labeled(12).unwrap();
    let states = trace(&s, &make_schedule(12).unwrap()).unwrap();
    assert_eq!(states.len(), 12);
    assert_eq!(states.last().unwrap().step(), 11);
    let csv = trace_csv(&states);
    assert_eq!(csv.lines().count(), 1 + 12 * 12);
}

#[test]
fn sequential_schedule_is_not_an_exchange() {
    for n2 in (4..=20).step_by(2) {
        let s = ChainState::labeled(n2).unwrap();
        let out = run_chain(&s, &make_sequential_schedule(n2).unwrap()).unwrap();
        assert_eq!(out.payloads()[n2 - 1], 1);
        assert!(!ends_exchanged(&s, &out));
    }
}

#[test]
fn transfer_duration_matches_physics() {
    let p = PhysicsParams::default();
    for n2 in (2..=20).step_by(2) {
        let r = hqarch::transfer_report(n2, &p, 40.0).unwrap();
        assert_eq!(r.duration_ns, (n2 - 1) as f64 * 6.47);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn end_exchange_after_2n_minus_1_steps(payloads in labels()) {
        let n2 = payloads.len();
        let s = ChainState::new(payloads.clone()).unwrap();
        let sched = make_schedule(n2).unwrap();
        prop_assert_eq!(sched.len(), n2 - 1);
        let out = run_chain(&s, &sched).unwrap();
        prop_assert_eq!(out.step(), n2 - 1);
        prop_assert_eq!(&out.payloads()[n2 - 1], &payloads[0]);
        prop_assert_eq!(&out.payloads()[0], &payloads[n2 - 1]);
    }

    #[test]
    fn matches_oracle_at_every_prefix(payloads in labels(), frac in 0.0f64..=1.0) {
        let n2 = payloads.len();
        let s = ChainState::new(payloads.clone()).unwrap();
        let sched = make_schedule(n2).unwrap();
        let k = ((n2 - 1) as f64 * frac).round() as usize;
        let out = run_prefix(&s, &sched, k).unwrap();
        let expected = oracle_run(&payloads, k);
        prop_assert_eq!(out.payloads(), expected.as_slice());
    }

    #[test]
    fn payloads_are_conserved(payloads in labels()) {
        let s = ChainState::new(payloads.clone()).unwrap();
        let out = run_chain(&s, &make_schedule(payloads.len()).unwrap()).unwrap();
        let mut a = payloads.clone();
        let mut b = out.payloads().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn steps_are_disjoint_adjacent_pairs(n2 in even_len()) {
        let sched = make_schedule(n2).unwrap();
        prop_assert!(sched.is_well_formed());
        for step in sched.steps() {
            let mut used = vec![0u8; n2];
            for &(a, b) in step {
                prop_assert_eq!(b, a + 1);
                used[a] += 1;
                used[b] += 1;
            }
            prop_assert!(used.iter().all(|&u| u <= 1));
        }
        prop_assert!(sched.driving_groups().len() <= 2);
    }
}
