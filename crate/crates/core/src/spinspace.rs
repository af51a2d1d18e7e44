//! Three-electron spin space of a single hybrid qubit.
//!
//! States live in the 8-dimensional product space of three spin-1/2
//! particles. The product basis is ordered big-endian with spin 1 as the
//! most significant factor and `↑` before `↓`:
//!
//! ```text
//! 0 ↑↑↑   1 ↑↑↓   2 ↑↓↑   3 ↑↓↓   4 ↓↑↑   5 ↓↑↓   6 ↓↓↑   7 ↓↓↓
//! ```
//!
//! Spins 1 and 2 are the electron pair in the doubly occupied dot, spin 3 is
//! the electron in the other dot.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

pub const DIM: usize = 8;
pub const NUM_SPINS: usize = 3;

/// Eigen-residual and orthonormality tolerance.
pub const EPS: f64 = 1e-12;

/// Labels of the product basis in storage order.
pub const BASIS_LABELS: [&str; DIM] = ["↑↑↑", "↑↑↓", "↑↓↑", "↑↓↓", "↓↑↑", "↓↑↓", "↓↓↑", "↓↓↓"];

/// A vector in the three-spin product space, amplitudes in [`BASIS_LABELS`] order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSpinState {
    amplitudes: [Complex64; DIM],
}

impl ThreeSpinState {
    pub fn new(amplitudes: [Complex64; DIM]) -> Self {
        Self { amplitudes }
    }

    pub fn zero() -> Self {
        Self::new([Complex64::new(0.0, 0.0); DIM])
    }

    pub fn from_real(amplitudes: [f64; DIM]) -> Self {
        Self::new(amplitudes.map(|a| Complex64::new(a, 0.0)))
    }

    /// Product basis vector `index` (0 = ↑↑↑ ... 7 = ↓↓↓).
    pub fn basis(index: usize) -> Self {
        assert!(index < DIM, "basis index {index} out of range");
        let mut s = Self::zero();
        s.amplitudes[index] = Complex64::new(1.0, 0.0);
        s
    }

    /// Basis vector from a label such as `"↑↓↓"` or the ASCII form `"udd"`.
    pub fn from_label(label: &str) -> Option<Self> {
        basis_index(label).map(Self::basis)
    }

    pub fn amplitudes(&self) -> &[Complex64; DIM] {
        &self.amplitudes
    }

    pub fn amplitude(&self, label: &str) -> Option<Complex64> {
        basis_index(label).map(|i| self.amplitudes[i])
    }

    pub fn is_finite(&self) -> bool {
        self.amplitudes.iter().all(|a| a.re.is_finite() && a.im.is_finite())
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            *self
        } else {
            *self * (1.0 / n)
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.amplitudes.map(|a| a * factor))
    }

    /// `‖self − λ·reference‖`, the residual of an eigen-equation.
    pub fn residual(&self, lambda: f64, reference: &Self) -> f64 {
        (*self - *reference * lambda).norm()
    }

    /// Eight lines `label  re  im` in basis order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (label, a) in BASIS_LABELS.iter().zip(self.amplitudes.iter()) {
            let _ = writeln!(out, "{label}  {:+.15e}  {:+.15e}", a.re, a.im);
        }
        out
    }
}

impl Add for ThreeSpinState {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (a, b) in out.amplitudes.iter_mut().zip(rhs.amplitudes.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for ThreeSpinState {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for (a, b) in out.amplitudes.iter_mut().zip(rhs.amplitudes.iter()) {
            *a -= b;
        }
        out
    }
}

impl Mul<f64> for ThreeSpinState {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.amplitudes.map(|a| a * rhs))
    }
}

fn basis_index(label: &str) -> Option<usize> {
    let mut index = 0usize;
    let mut count = 0usize;
    for c in label.chars() {
        let bit = match c {
            '↑' | 'u' | 'U' => 0,
            '↓' | 'd' | 'D' => 1,
            _ => return None,
        };
        index = (index << 1) | bit;
        count += 1;
    }
    (count == NUM_SPINS).then_some(index)
}

/// Bit of spin `spin` (0-based, spin 0 most significant) in basis `index`;
/// 0 means up.
#[inline]
fn spin_bit(index: usize, spin: usize) -> usize {
    (index >> (NUM_SPINS - 1 - spin)) & 1
}

/// The two logical states `|0⟩` and `|1⟩` of the hybrid qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogicalBasis {
    pub zero: ThreeSpinState,
    pub one: ThreeSpinState,
}

/// `|0⟩ = |S⟩|↓⟩` and `|1⟩ = √(1/3)|T₀⟩|↓⟩ − √(2/3)|T₋⟩|↑⟩`, with the pair
/// states on spins 1–2 and the lone spin on spin 3.
pub fn build_logical_basis() -> LogicalBasis {
    let up = [1.0, 0.0];
    let down = [0.0, 1.0];
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;

    // Pair states over (spin1, spin2) in order ↑↑, ↑↓, ↓↑, ↓↓.
    let singlet = [0.0, inv_sqrt2, -inv_sqrt2, 0.0];
    let triplet_0 = [0.0, inv_sqrt2, inv_sqrt2, 0.0];
    let triplet_minus = [0.0, 0.0, 0.0, 1.0];

    let product = |pair: [f64; 4], third: [f64; 2]| {
        let mut amps = [0.0; DIM];
        for (p, &pa) in pair.iter().enumerate() {
            for (t, &ta) in third.iter().enumerate() {
                amps[(p << 1) | t] = pa * ta;
            }
        }
        ThreeSpinState::from_real(amps)
    };

    let zero = product(singlet, down);
    let one = product(triplet_0, down) * (1.0f64 / 3.0).sqrt()
        - product(triplet_minus, up) * (2.0f64 / 3.0).sqrt();
    LogicalBasis { zero, one }
}

/// `S_z|ψ⟩` in units of ħ.
pub fn apply_sz(state: &ThreeSpinState) -> ThreeSpinState {
    let mut out = ThreeSpinState::zero();
    for (index, amp) in state.amplitudes.iter().enumerate() {
        let m: f64 = (0..NUM_SPINS)
            .map(|s| if spin_bit(index, s) == 0 { 0.5 } else { -0.5 })
            .sum();
        out.amplitudes[index] = amp * m;
    }
    out
}

/// `S²|ψ⟩` in units of ħ².
///
/// Uses `S_i·S_j = P_ij/2 − 1/4` with `P_ij` the exchange of spins i and j, so
/// `S² = 3/4 + Σ_{i<j} P_ij` for three spin-1/2 particles.
pub fn apply_s_squared(state: &ThreeSpinState) -> ThreeSpinState {
    let mut out = *state * 0.75;
    for i in 0..NUM_SPINS {
        for j in (i + 1)..NUM_SPINS {
            for (index, amp) in state.amplitudes.iter().enumerate() {
                out.amplitudes[exchange(index, i, j)] += amp;
            }
        }
    }
    out
}

fn exchange(index: usize, i: usize, j: usize) -> usize {
    let bi = spin_bit(index, i);
    let bj = spin_bit(index, j);
    if bi == bj {
        index
    } else {
        index ^ (1 << (NUM_SPINS - 1 - i)) ^ (1 << (NUM_SPINS - 1 - j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn amplitudes_of_logical_states() {
        let basis = build_logical_basis();
        let a = basis.zero.amplitude("↑↓↓").unwrap();
        assert!((a.re - 1.0 / 2f64.sqrt()).abs() < EPS && a.im == 0.0);
        let b = basis.one.amplitude("↓↓↑").unwrap();
        assert!((b.re + (2.0f64 / 3.0).sqrt()).abs() < EPS);
        assert!(basis.zero.inner(&basis.one).norm() < EPS);
    }

    #[test]
    fn sz_on_stretched_states() {
        let down = ThreeSpinState::from_label("↓↓↓").unwrap();
        assert!(apply_sz(&down).residual(-1.5, &down) < EPS);
        let up = ThreeSpinState::from_label("uuu").unwrap();
        assert!(apply_sz(&up).residual(1.5, &up) < EPS);
    }

    #[test]
    fn s_squared_on_quadruplet() {
        let down = ThreeSpinState::basis(7);
        assert!(apply_s_squared(&down).residual(15.0 / 4.0, &down) < EPS);
    }

    #[test]
    fn logical_states_are_doublet_members() {
        let basis = build_logical_basis();
        for s in [basis.zero, basis.one] {
            assert!(apply_sz(&s).residual(-0.5, &s) < EPS);
            assert!(apply_s_squared(&s).residual(0.75, &s) < EPS);
        }
    }

    #[test]
    fn labels_round_trip() {
        for (i, label) in BASIS_LABELS.iter().enumerate() {
            assert_eq!(basis_index(label), Some(i));
        }
        assert_eq!(basis_index("↑↑"), None);
        assert_eq!(basis_index("uxd"), None);
    }

    #[test]
    fn dump_has_eight_ordered_lines() {
        let text = build_logical_basis().zero.dump();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines[3].starts_with("↑↓↓"));
        assert!(lines[3].contains("+7.071067811865476e-1"));
    }
}
