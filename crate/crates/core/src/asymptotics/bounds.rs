use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::frameness::{g_asymmetry, TwirlOperation};
use crate::group::{binomial, CollectiveSpinRep, FiniteGroupRep};
use crate::operator::{density_tensor_power, DensityOperator};

/// Slack allowed above `log₂|G|` before a row counts as a violation.
pub const BOUND_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroupBoundReport {
    pub bound: f64,
    /// `(N, A_G(ρ^{⊗N}))` for `N = 1..=N_max`.
    pub rows: Vec<(u32, f64)>,
}

impl FiniteGroupBoundReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|&(_, a)| a <= self.bound + BOUND_SLACK)
    }
}

/// Twirls `ρ^{⊗N}` under `T(g)^{⊗N}` for `N = 1..=n_max` and records each
/// asymmetry against `log₂|G|`.
pub fn finite_group_bound_check(
    rep: &FiniteGroupRep,
    rho: &DensityOperator,
    n_max: u32,
    budget: &DimensionBudget,
) -> Result<FiniteGroupBoundReport> {
    if n_max == 0 {
        bail!(Domain, "N_max must be at least 1");
    }
    if rho.dim() != rep.dim() {
        bail!(Shape, "state has dim {}, representation has dim {}", rho.dim(), rep.dim());
    }
    budget.power("finite-group bound check", rep.dim(), n_max)?;
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let rep_n = rep.tensor_power(n, budget)?;
        let rho_n = density_tensor_power(rho, n, budget)?;
        let a = g_asymmetry(&TwirlOperation::Finite(&rep_n), &rho_n)?.asymmetry;
        rows.push((n, a));
    }
    Ok(FiniteGroupBoundReport { bound: (rep.order() as f64).log2(), rows })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LieGroupBound {
    pub copies: u32,
    pub dim: u32,
    /// `2·log₂ C(N+d−1, d−1)`.
    pub exact: f64,
    /// `2(d−1)·log₂N`.
    pub asymptotic: f64,
}

pub fn lie_group_log_bound(copies: u32, dim: u32) -> Result<LieGroupBound> {
    if copies < 2 || dim < 2 {
        bail!(Domain, "need N >= 2 and d >= 2, got N = {copies}, d = {dim}");
    }
    let count = binomial(copies as u64 + dim as u64 - 1, dim as u64 - 1);
    Ok(LieGroupBound {
        copies,
        dim,
        exact: 2.0 * (count as f64).log2(),
        asymptotic: 2.0 * (dim as f64 - 1.0) * (copies as f64).log2(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2BoundCheck {
    pub measured: f64,
    pub bound: LieGroupBound,
}

impl Su2BoundCheck {
    pub fn holds(&self) -> bool {
        self.measured <= self.bound.exact + BOUND_SLACK
    }
}

/// Measured `A_{SU(2)}` of an `N`-qubit state against the qubit (`d = 2`) bound.
pub fn su2_lie_bound_check(rep: &CollectiveSpinRep, rho: &DensityOperator) -> Result<Su2BoundCheck> {
    let measured = g_asymmetry(&TwirlOperation::Su2(rep), rho)?.asymmetry;
    Ok(Su2BoundCheck { measured, bound: lie_group_log_bound(rep.n_qubits(), 2)? })
}
