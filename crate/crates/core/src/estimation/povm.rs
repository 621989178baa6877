use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{bail, Result};
use crate::linalg::{self, CMatrix};
use crate::random;

/// Smallest eigenvalue an effect may have.
pub const EFFECT_PSD_TOL: f64 = 1e-10;
/// Allowed entrywise deviation of `Σ E_k` from the identity.
pub const POVM_COMPLETENESS_TOL: f64 = 1e-9;

/// A measurement with finitely many outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePovm {
    effects: Vec<CMatrix>,
    label: String,
}

impl DiscretePovm {
    pub fn new(effects: Vec<CMatrix>, label: impl Into<String>) -> Result<Self> {
        let Some(first) = effects.first() else {
            bail!(InvalidPovm, "a POVM needs at least one effect");
        };
        let dim = first.nrows();
        let mut total = CMatrix::zeros(dim, dim);
        for (k, e) in effects.iter().enumerate() {
            if e.nrows() != dim || e.ncols() != dim {
                bail!(Shape, "effect {k} is {}x{}, expected {dim}x{dim}", e.nrows(), e.ncols());
            }
            let herm = linalg::hermiticity_defect(e);
            if herm > POVM_COMPLETENESS_TOL {
                bail!(InvalidPovm, "effect {k} is not Hermitian (defect {herm:e})");
            }
            let low = linalg::eigh(e).min_value();
            if low < -EFFECT_PSD_TOL {
                bail!(InvalidPovm, "effect {k} has eigenvalue {low:e}");
            }
            total += e;
        }
        let defect = linalg::max_abs_diff(&total, &linalg::identity(dim));
        if defect > POVM_COMPLETENESS_TOL {
            bail!(InvalidPovm, "effects sum to identity only within {defect:e}");
        }
        Ok(Self { effects, label: label.into() })
    }

    /// The single effect `I`.
    pub fn trivial(dim: usize) -> Self {
        Self { effects: alloc::vec![linalg::identity(dim)], label: "trivial".to_string() }
    }

    /// Rank-one projectors onto the columns of a unitary.
    pub fn projective(basis: &CMatrix, label: impl Into<String>) -> Result<Self> {
        let defect = linalg::unitarity_defect(basis);
        if !basis.is_square() || defect > 1e-10 {
            bail!(InvalidPovm, "projective POVM needs a unitary basis");
        }
        let effects = (0..basis.ncols())
            .map(|k| {
                let v = basis.column(k).into_owned();
                linalg::outer(&v, &v)
            })
            .collect();
        Self::new(effects, label)
    }

    /// `outcomes` effects `S^{-1/2} A_k S^{-1/2}` from random positive `A_k`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize, outcomes: usize) -> Result<Self> {
        if outcomes == 0 {
            bail!(InvalidPovm, "need at least one outcome");
        }
        let raw: Vec<CMatrix> = (0..outcomes)
            .map(|_| {
                let g = random::ginibre(rng, dim, dim);
                &g * g.adjoint()
            })
            .collect();
        let total = raw.iter().fold(CMatrix::zeros(dim, dim), |acc, a| acc + a);
        let inv_sqrt = linalg::eigh(&total).map(|x| 1.0 / x.sqrt());
        let effects = raw.iter().map(|a| linalg::hermitize(&(&inv_sqrt * a * &inv_sqrt))).collect();
        Self::new(effects, "random")
    }

    /// Merges outcomes: effect `i` of the result is the sum over `groups[i]`.
    /// Every outcome must appear in exactly one group.
    pub fn coarse_grain(&self, groups: &[Vec<usize>]) -> Result<Self> {
        let mut seen = alloc::vec![false; self.effects.len()];
        let dim = self.dim();
        let mut effects = Vec::with_capacity(groups.len());
        for group in groups {
            let mut e = CMatrix::zeros(dim, dim);
            for &k in group {
                if k >= seen.len() || seen[k] {
                    bail!(InvalidPovm, "outcome {k} is missing or repeated in the grouping");
                }
                seen[k] = true;
                e += &self.effects[k];
            }
            effects.push(e);
        }
        if seen.iter().any(|s| !s) {
            bail!(InvalidPovm, "grouping leaves outcomes out");
        }
        Self::new(effects, alloc::format!("{}-coarse", self.label))
    }

    pub fn effects(&self) -> &[CMatrix] {
        &self.effects
    }

    pub fn outcomes(&self) -> usize {
        self.effects.len()
    }

    pub fn dim(&self) -> usize {
        self.effects[0].nrows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Outcome probabilities `Tr(ρE_k)`, clamped at zero.
    pub fn probabilities(&self, rho: &CMatrix) -> Vec<f64> {
        self.effects
            .iter()
            .map(|e| linalg::trace_of_product(rho, e).re.max(0.0))
            .collect()
    }
}
