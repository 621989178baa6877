use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::group::ChargeGrading;
use crate::linalg::{c, CVector};
use crate::operator::{trace_distance, PureState};

use super::convolution::number_variance;

/// Upper charge `k·n` used by default. With `k = 2` the variances come out
/// as `n²` and `n² − 4n`; with `k = 1` they are a quarter of that.
pub const DEFAULT_CHARGE_MULTIPLIER: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessRow {
    pub n: u64,
    /// `‖ψ_n − φ_n‖₁`.
    pub trace_distance: f64,
    pub variance_psi: f64,
    pub variance_phi: f64,
    /// `(V(ψ_n) − V(φ_n)) / log₂ n`.
    pub ratio: f64,
}

impl WitnessRow {
    pub fn variance_gap(&self) -> f64 {
        self.variance_psi - self.variance_phi
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessReport {
    pub charge_multiplier: u64,
    pub rows: Vec<WitnessRow>,
}

impl WitnessReport {
    /// Whether the trace distance decreases strictly across the rows.
    pub fn distance_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].trace_distance < w[0].trace_distance)
    }

    pub fn ratio_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].ratio > w[0].ratio)
    }
}

/// `ψ_n = (|0⟩ + |kn⟩)/√2` and `φ_n = √(½ − 1/√n)|0⟩ + √(½ + 1/√n)|kn⟩`
/// as two-level states, with the grading `{0, kn}`.
pub fn witness_states(n: u64, charge_multiplier: u64) -> Result<(ChargeGrading, PureState, PureState)> {
    if n <= 4 {
        bail!(Domain, "witness needs n > 4, got {n}");
    }
    if charge_multiplier == 0 {
        bail!(Domain, "charge multiplier must be positive");
    }
    let grading = ChargeGrading::new(alloc::vec![0, charge_multiplier * n])?;
    let s = 1.0 / 2f64.sqrt();
    let psi = PureState::new(CVector::from_vec(alloc::vec![c(s, 0.0), c(s, 0.0)]))?;
    let shift = 1.0 / (n as f64).sqrt();
    let phi = PureState::normalized(CVector::from_vec(alloc::vec![
        c((0.5 - shift).sqrt(), 0.0),
        c((0.5 + shift).sqrt(), 0.0)
    ]))?;
    Ok((grading, psi, phi))
}

pub fn variance_discontinuity_witness(ns: &[u64], charge_multiplier: u64) -> Result<WitnessReport> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let (grading, psi, phi) = witness_states(n, charge_multiplier)?;
        let (psi, phi) = (psi.projector(), phi.projector());
        let variance_psi = number_variance(&grading, &psi)?;
        let variance_phi = number_variance(&grading, &phi)?;
        rows.push(WitnessRow {
            n,
            trace_distance: trace_distance(&psi, &phi)?,
            variance_psi,
            variance_phi,
            ratio: (variance_psi - variance_phi) / (n as f64).log2(),
        });
    }
    Ok(WitnessReport { charge_multiplier, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n16_values() {
        let report = variance_discontinuity_witness(&[16], DEFAULT_CHARGE_MULTIPLIER).unwrap();
        let row = report.rows[0];
        assert!((row.variance_psi - 256.0).abs() < 1e-9);
        assert!((row.variance_phi - 192.0).abs() < 1e-9);
        assert!((row.variance_gap() - 64.0).abs() < 1e-9);
        assert!((row.trace_distance - 0.5176380902050414).abs() < 1e-4);
    }

    #[test]
    fn unit_multiplier_scales_by_a_quarter() {
        let row = variance_discontinuity_witness(&[16], 1).unwrap().rows[0];
        assert!((row.variance_psi - 64.0).abs() < 1e-9);
        assert!((row.variance_gap() - 16.0).abs() < 1e-9);
    }

    #[test]
    fn monotone_trends() {
        let ns: Vec<u64> = (3..=10).map(|k| 1u64 << k).collect();
        let report = variance_discontinuity_witness(&ns, DEFAULT_CHARGE_MULTIPLIER).unwrap();
        assert!(report.distance_decreasing());
        assert!(report.ratio_increasing());
    }

    #[test]
    fn small_n_rejected() {
        assert!(variance_discontinuity_witness(&[4], 2).is_err());
    }
}
