use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::operator::ProbabilityDistribution;

use super::convolution::{convolve_copies, gaussian_entropy_model, ModelConstant};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingRow {
    pub copies: u32,
    pub asymmetry: f64,
    /// `None` when the per-copy variance is zero.
    pub model: Option<f64>,
    pub gap: Option<f64>,
    pub per_copy_rate: f64,
}

/// Exact `A(ψ^{⊗N})` against the Gaussian model over a grid of `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub rows: Vec<ScalingRow>,
    pub model: ModelConstant,
    pub variance: f64,
}

impl ScalingReport {
    /// Whether `A/N` is non-increasing from the first row with `N ≥ from` on.
    pub fn rate_decreasing_from(&self, from: u32) -> bool {
        let tail: Vec<f64> = self.rows.iter().filter(|r| r.copies >= from).map(|r| r.per_copy_rate).collect();
        tail.windows(2).all(|w| w[1] <= w[0] + 1e-12)
    }

    pub fn max_gap_from(&self, from: u32) -> Option<f64> {
        self.rows
            .iter()
            .filter(|r| r.copies >= from)
            .filter_map(|r| r.gap)
            .map(f64::abs)
            .reduce(f64::max)
    }
}

fn check_grid(copies: &[u32]) -> Result<()> {
    if copies.is_empty() {
        bail!(Domain, "empty N grid");
    }
    if copies[0] == 0 || copies.windows(2).any(|w| w[1] <= w[0]) {
        bail!(Domain, "N grid must be positive and strictly increasing");
    }
    Ok(())
}

pub fn regularized_asymmetry_table(
    per_copy: &ProbabilityDistribution,
    copies: &[u32],
    constant: ModelConstant,
    budget: &DimensionBudget,
) -> Result<ScalingReport> {
    check_grid(copies)?;
    let variance = per_copy.variance();
    let mut rows = Vec::with_capacity(copies.len());
    for &n in copies {
        let asymmetry = convolve_copies(per_copy, n, budget)?.entropy();
        let model = if variance > 0.0 {
            Some(gaussian_entropy_model(variance, n, constant)?)
        } else {
            None
        };
        rows.push(ScalingRow {
            copies: n,
            asymmetry,
            model,
            gap: model.map(|m| asymmetry - m),
            per_copy_rate: asymmetry / n as f64,
        });
    }
    Ok(ScalingReport { rows, model: constant, variance })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelinearizedRow {
    pub copies: u32,
    pub asymmetry: f64,
    /// `L(A) = 2^{2A}`.
    pub linearized: f64,
    pub per_copy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelinearizationReport {
    pub rows: Vec<RelinearizedRow>,
    pub variance: f64,
    pub model: ModelConstant,
    /// `4πV·k` with `k = 2^{2(c−½)}`.
    pub predicted_slope: f64,
}

impl RelinearizationReport {
    /// `L(A)/N` at the largest `N`.
    pub fn plateau(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.per_copy)
    }

    pub fn plateau_relative_error(&self) -> f64 {
        if self.predicted_slope == 0.0 {
            return self.plateau();
        }
        (self.plateau() - self.predicted_slope).abs() / self.predicted_slope
    }
}

/// `L(A_{U(1)}(ψ^{⊗N}))` along a grid of `N`; it grows linearly with slope
/// `4πV·k`.
pub fn relinearized_monotone(
    per_copy: &ProbabilityDistribution,
    copies: &[u32],
    constant: ModelConstant,
    budget: &DimensionBudget,
) -> Result<RelinearizationReport> {
    check_grid(copies)?;
    let variance = per_copy.variance();
    let mut rows = Vec::with_capacity(copies.len());
    for &n in copies {
        let asymmetry = convolve_copies(per_copy, n, budget)?.entropy();
        let linearized = (2.0 * asymmetry).exp2();
        rows.push(RelinearizedRow { copies: n, asymmetry, linearized, per_copy: linearized / n as f64 });
    }
    Ok(RelinearizationReport {
        rows,
        variance,
        model: constant,
        predicted_slope: 4.0 * core::f64::consts::PI * variance * constant.relinearization_factor(),
    })
}
