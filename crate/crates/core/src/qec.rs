//! Steane-code accounting and recursive concatenation.
//!
//! With `k` levels of encoding, a physical error rate `p` and threshold
//! `1/c`, the logical error rate is `(c·p)^(2^k) / c`. It is evaluated through
//! the one-level recurrence `r(k+1) = c · r(k)²`, `r(0) = p`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::floorplan::RegisterSummary;

/// Qubits in one logical block of the floorplan layout (data plus ancillae).
/// The Steane accounting `7 + 12` gives 19; the layout carries one more.
pub const LAYOUT_BLOCK_SIZE: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QecError {
    #[error("physical error rate must lie in [0, 1], got {0}")]
    ErrorRate(f64),
    #[error("threshold 1/c must be strictly positive, got {0}")]
    Threshold(f64),
    #[error("{name} exponent must be strictly positive, got {value}")]
    Exponent { name: &'static str, value: f64 },
    #[error("physical qubit count overflows at concatenation level {0}")]
    Overflow(u32),
}

/// `[[n, k, d]]` code parameters plus the ancilla count of one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteaneParams {
    pub n_code: u32,
    pub k_code: u32,
    pub distance: u32,
    pub ancillae: u32,
}

impl Default for SteaneParams {
    fn default() -> Self {
        Self {
            n_code: 7,
            k_code: 1,
            distance: 3,
            ancillae: 12,
        }
    }
}

impl SteaneParams {
    pub fn with_ancillae(ancillae: u32) -> Self {
        Self {
            ancillae,
            ..Self::default()
        }
    }

    /// Physical qubits replacing one qubit per level: `n + ancillae`.
    pub fn block_size(&self) -> u32 {
        self.n_code + self.ancillae
    }
}

/// One point of the concatenation hierarchy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QecLevel {
    pub order_k: u32,
    pub p_phys: f64,
    pub c_inv_threshold: f64,
}

impl QecLevel {
    pub fn new(order_k: u32, p_phys: f64, c_inv_threshold: f64) -> Result<Self, QecError> {
        if !(0.0..=1.0).contains(&p_phys) {
            return Err(QecError::ErrorRate(p_phys));
        }
        if !(c_inv_threshold.is_finite() && c_inv_threshold > 0.0) {
            return Err(QecError::Threshold(c_inv_threshold));
        }
        Ok(Self {
            order_k,
            p_phys,
            c_inv_threshold,
        })
    }

    pub fn with_order(&self, order_k: u32) -> Self {
        Self { order_k, ..*self }
    }

    pub fn c(&self) -> f64 {
        1.0 / self.c_inv_threshold
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogicalErrorRate {
    pub value: f64,
    /// Set when the formula exceeded 1 and the value was clamped.
    pub clamped: bool,
}

/// `(c·p)^(2^k) / c`, clamped to `[0, 1]`.
pub fn logical_error_rate(level: &QecLevel) -> LogicalErrorRate {
    let c = level.c();
    let mut rate = level.p_phys;
    for _ in 0..level.order_k {
        rate = c * (rate * rate);
    }
    if rate > 1.0 || rate.is_nan() {
        LogicalErrorRate {
            value: 1.0,
            clamped: true,
        }
    } else {
        LogicalErrorRate {
            value: rate,
            clamped: false,
        }
    }
}

/// `p < 1/c`: below threshold, more levels give a lower logical error rate.
pub fn suppression_condition(level: &QecLevel) -> bool {
    level.p_phys < level.c_inv_threshold
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overhead {
    pub area_um2: f64,
    pub time_factor: f64,
    pub physical_qubits: u64,
}

/// Area, time and qubit cost of `level.order_k` concatenation levels on top
/// of `base`, with `block_size` qubits replacing each qubit per level. The
/// area and time exponents are free parameters of the power law.
pub fn overhead(
    level: &QecLevel,
    base: &RegisterSummary,
    area_exponent: f64,
    time_exponent: f64,
    block_size: u32,
) -> Result<Overhead, QecError> {
    for (name, value) in [("area", area_exponent), ("time", time_exponent)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(QecError::Exponent { name, value });
        }
    }
    let k = level.order_k;
    let scale = f64::from(block_size);
    let per_level = u64::from(block_size);
    let mut physical_qubits = base.data_qubits + base.comm_qubits;
    for _ in 0..k {
        physical_qubits = physical_qubits.checked_mul(per_level).ok_or(QecError::Overflow(k))?;
    }
    Ok(Overhead {
        area_um2: base.total_area_um2 * scale.powf(f64::from(k) * area_exponent),
        time_factor: scale.powf(f64::from(k) * time_exponent),
        physical_qubits,
    })
}

/// `k,p,c_inv,logical_error_rate` rows for every `p` and `k = 0..=k_max`.
pub fn threshold_sweep_csv(p_values: &[f64], c_inv_threshold: f64, k_max: u32) -> Result<String, QecError> {
    let mut out = String::from("k,p,c_inv,logical_error_rate\n");
    for k in 0..=k_max {
        for &p in p_values {
            let level = QecLevel::new(k, p, c_inv_threshold)?;
            let rate = logical_error_rate(&level);
            let _ = writeln!(out, "{k},{p:e},{c_inv_threshold:e},{:e}", rate.value);
        }
    }
    Ok(out)
}
