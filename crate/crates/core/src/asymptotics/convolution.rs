use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::group::ChargeGrading;
use crate::operator::{shannon_entropy, DensityOperator, ProbabilityDistribution};

/// `V(ρ) = Tr[ρN̂²] − (Tr[ρN̂])²`.
pub fn number_variance(grading: &ChargeGrading, rho: &DensityOperator) -> Result<f64> {
    if grading.dim() != rho.dim() {
        bail!(Shape, "grading has dim {}, state has dim {}", grading.dim(), rho.dim());
    }
    let (mut first, mut second) = (0.0, 0.0);
    for (i, &n) in grading.charges().iter().enumerate() {
        let w = rho.matrix()[(i, i)].re;
        let n = n as f64;
        first += w * n;
        second += w * n * n;
    }
    Ok((second - first * first).max(0.0))
}

/// Total-charge distribution of `N` independent copies.
///
/// Entry `k` of a distribution is the weight of charge `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberDistributionProfile {
    pub per_copy: ProbabilityDistribution,
    pub copies: u32,
    pub convolved: ProbabilityDistribution,
}

impl NumberDistributionProfile {
    pub fn mean(&self) -> f64 {
        self.convolved.mean()
    }

    pub fn variance(&self) -> f64 {
        self.convolved.variance()
    }

    pub fn entropy(&self) -> f64 {
        shannon_entropy(&self.convolved)
    }
}

/// Exact `N`-fold self-convolution by dynamic programming.
pub fn convolve_copies(
    per_copy: &ProbabilityDistribution,
    copies: u32,
    budget: &DimensionBudget,
) -> Result<NumberDistributionProfile> {
    if copies == 0 {
        bail!(Domain, "need at least one copy");
    }
    let width = per_copy.len() - 1;
    let support = width as u128 * copies as u128 + 1;
    budget.check("convolved charge support", support)?;

    let p = per_copy.weights();
    let mut acc: Vec<f64> = p.to_vec();
    for _ in 1..copies {
        let mut next = alloc::vec![0.0; acc.len() + width];
        for (a, &wa) in acc.iter().enumerate() {
            if wa == 0.0 {
                continue;
            }
            for (b, &wb) in p.iter().enumerate() {
                next[a + b] += wa * wb;
            }
        }
        acc = next;
    }
    Ok(NumberDistributionProfile {
        per_copy: per_copy.clone(),
        copies,
        convolved: ProbabilityDistribution::from_unnormalized(acc)?,
    })
}

/// `A_{U(1)}(ψ^{⊗N}) = H({r_n})` for a pure per-copy state with
/// one-dimensional charge sectors, computed from its charge weights alone.
pub fn u1_ncopy_asymmetry(per_copy: &ProbabilityDistribution, copies: u32, budget: &DimensionBudget) -> Result<f64> {
    convolve_copies(per_copy, copies, budget).map(|p| p.entropy())
}

/// Additive constant of the Gaussian entropy model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModelConstant {
    /// `½·log₂e`, the differential entropy constant of a Gaussian in bits.
    #[default]
    Bits,
    /// The bare `½`.
    Literal,
}

impl ModelConstant {
    pub fn value(self) -> f64 {
        match self {
            ModelConstant::Bits => 0.5 * core::f64::consts::LOG2_E,
            ModelConstant::Literal => 0.5,
        }
    }

    /// `k = 2^{2(c − ½)}` in `L(A)/N → 4πV·k`.
    pub fn relinearization_factor(self) -> f64 {
        (2.0 * (self.value() - 0.5)).exp2()
    }

    pub fn label(self) -> &'static str {
        match self {
            ModelConstant::Bits => "half-log2e",
            ModelConstant::Literal => "half",
        }
    }
}

/// `½log₂(2πNV) + c`.
pub fn gaussian_entropy_model(variance: f64, copies: u32, constant: ModelConstant) -> Result<f64> {
    if !(variance > 0.0) {
        bail!(Domain, "Gaussian model needs V > 0, got {variance}");
    }
    if copies == 0 {
        bail!(Domain, "need at least one copy");
    }
    let arg = 2.0 * core::f64::consts::PI * copies as f64 * variance;
    Ok(0.5 * arg.log2() + constant.value())
}
