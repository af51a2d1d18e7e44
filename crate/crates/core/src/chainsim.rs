//! Discrete simulation of state transfer along a SWAP chain.
//!
//! SWAPs are ideal, so a chain is a list of opaque payload labels and every
//! step applies a set of disjoint adjacent transpositions. Positions are
//! 0-based in this API; the odd steps pair (0,1), (2,3), … and the even steps
//! pair (1,2), (3,4), …, i.e. (1,2), (3,4) and (2,3), (4,5) in 1-based terms.

use std::fmt::{Display, Write as _};

use thiserror::Error;

use crate::physics::{t_swap, PhysicsParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain length must be even and at least 2, got {0}")]
    InvalidLength(usize),
    #[error("schedule built for {schedule} qubits applied to a chain of {chain}")]
    LengthMismatch { schedule: usize, chain: usize },
}

fn check_length(n2: usize) -> Result<(), ChainError> {
    if n2 < 2 || !n2.is_multiple_of(2) {
        Err(ChainError::InvalidLength(n2))
    } else {
        Ok(())
    }
}

/// Payloads held by the chain qubits, plus the number of steps applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainState<T> {
    payloads: Vec<T>,
    step: usize,
}

impl<T: Clone> ChainState<T> {
    pub fn new(payloads: Vec<T>) -> Result<Self, ChainError> {
        check_length(payloads.len())?;
        Ok(Self { payloads, step: 0 })
    }

    pub fn payloads(&self) -> &[T] {
        &self.payloads
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn len(&self) -> usize {
        self.payloads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payloads.is_empty()
    }

    fn apply(&mut self, pairs: &[(usize, usize)]) {
        for &(a, b) in pairs {
            self.payloads.swap(a, b);
        }
        self.step += 1;
    }
}

impl ChainState<u32> {
    /// Chain whose qubit `i` (1-based) holds label `i`.
    pub fn labeled(n2: usize) -> Result<Self, ChainError> {
        Self::new((1..=n2 as u32).collect())
    }
}

/// Steps of disjoint adjacent transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapSchedule {
    n2: usize,
    steps: Vec<Vec<(usize, usize)>>,
}

impl SwapSchedule {
    pub fn chain_len(&self) -> usize {
        self.n2
    }

    pub fn steps(&self) -> &[Vec<(usize, usize)>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The step list with 1-based qubit indices.
    pub fn one_based(&self) -> Vec<Vec<(usize, usize)>> {
        self.steps
            .iter()
            .map(|s| s.iter().map(|&(a, b)| (a + 1, b + 1)).collect())
            .collect()
    }

    /// True when no qubit appears twice within a step and every pair is adjacent.
    pub fn is_well_formed(&self) -> bool {
        self.steps.iter().all(|step| {
            let mut seen = vec![false; self.n2];
            step.iter().all(|&(a, b)| {
                let ok = b == a + 1 && b < self.n2 && !seen[a] && !seen[b];
                if ok {
                    seen[a] = true;
                    seen[b] = true;
                }
                ok
            })
        })
    }

    /// The two gate groups that alternate in the parallel schedule: the pairs
    /// driven on odd steps and the pairs driven on even steps.
    pub fn driving_groups(&self) -> Vec<Vec<(usize, usize)>> {
        let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
        for step in &self.steps {
            if !groups.contains(step) {
                groups.push(step.clone());
            }
        }
        groups
    }

    fn prefix(&self, k: usize) -> &[Vec<(usize, usize)>] {
        &self.steps[..k.min(self.steps.len())]
    }
}

fn odd_pairs(n2: usize) -> Vec<(usize, usize)> {
    (0..n2 / 2).map(|i| (2 * i, 2 * i + 1)).collect()
}

fn even_pairs(n2: usize) -> Vec<(usize, usize)> {
    (1..n2 / 2).map(|i| (2 * i - 1, 2 * i)).collect()
}

/// Parallel schedule: `2n − 1` steps alternating the odd and even pairings.
/// For a two-qubit chain the even pairing is empty and only one step exists.
pub fn make_schedule(n2: usize) -> Result<SwapSchedule, ChainError> {
    check_length(n2)?;
    let odd = odd_pairs(n2);
    let even = even_pairs(n2);
    let steps = (0..n2 - 1)
        .map(|k| if k % 2 == 0 { odd.clone() } else { even.clone() })
        .collect();
    Ok(SwapSchedule { n2, steps })
}

/// Sequential schedule: one SWAP per step walking from the head to the tail,
/// `(1,2), (2,3), …, (2n−1, 2n)`. Moves the head payload to the tail in
/// `2n − 1` steps but does not bring the tail payload back to the head.
pub fn make_sequential_schedule(n2: usize) -> Result<SwapSchedule, ChainError> {
    check_length(n2)?;
    let steps = (0..n2 - 1).map(|i| vec![(i, i + 1)]).collect();
    Ok(SwapSchedule { n2, steps })
}

/// Applies every step of `schedule` in order.
pub fn run_chain<T: Clone>(state: &ChainState<T>, schedule: &SwapSchedule) -> Result<ChainState<T>, ChainError> {
    run_prefix(state, schedule, schedule.len())
}

/// Applies the first `steps` steps of `schedule`.
pub fn run_prefix<T: Clone>(
    state: &ChainState<T>,
    schedule: &SwapSchedule,
    steps: usize,
) -> Result<ChainState<T>, ChainError> {
    if state.len() != schedule.n2 {
        return Err(ChainError::LengthMismatch {
            schedule: schedule.n2,
            chain: state.len(),
        });
    }
    let mut out = state.clone();
    for step in schedule.prefix(steps) {
        out.apply(step);
    }
    Ok(out)
}

/// Every intermediate state, starting with the input (step 0).
pub fn trace<T: Clone>(state: &ChainState<T>, schedule: &SwapSchedule) -> Result<Vec<ChainState<T>>, ChainError> {
    if state.len() != schedule.n2 {
        return Err(ChainError::LengthMismatch {
            schedule: schedule.n2,
            chain: state.len(),
        });
    }
    let mut out = Vec::with_capacity(schedule.len() + 1);
    let mut current = state.clone();
    out.push(current.clone());
    for step in &schedule.steps {
        current.apply(step);
        out.push(current.clone());
    }
    Ok(out)
}

/// `step,position,payload` rows (1-based positions) for a trace.
pub fn trace_csv<T: Display>(states: &[ChainState<T>]) -> String {
    let mut out = String::from("step,position,payload\n");
    for s in states {
        for (pos, payload) in s.payloads.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", s.step, pos + 1, payload);
        }
    }
    out
}

/// True when the payloads initially at both ends have traded places.
pub fn ends_exchanged<T: PartialEq>(initial: &ChainState<T>, current: &ChainState<T>) -> bool {
    let n = initial.payloads.len();
    n >= 2
        && current.payloads.len() == n
        && current.payloads[n - 1] == initial.payloads[0]
        && current.payloads[0] == initial.payloads[n - 1]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferReport {
    pub steps: usize,
    pub duration_ns: f64,
}

/// Step count and wall time for a parallel transfer over `n2` qubits.
pub fn transfer_report(n2: usize, params: &PhysicsParams, d_id_nm: f64) -> Result<TransferReport, ChainError> {
    let steps = make_schedule(n2)?.len();
    Ok(TransferReport {
        steps,
        duration_ns: steps as f64 * t_swap(params, d_id_nm),
    })
}
