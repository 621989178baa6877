use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix, CVector};

/// Tolerance on Hermiticity, trace and positivity of a density operator.
pub const STATE_TOL: f64 = 1e-10;
/// Tolerance on the Euclidean norm of a pure state.
pub const NORM_TOL: f64 = 1e-12;
/// Tolerance on the normalization and sign of probability weights.
pub const DISTRIBUTION_TOL: f64 = 1e-10;

/// A positive semidefinite, unit-trace, Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates all three invariants at [`STATE_TOL`].
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            bail!(
                Shape,
                "density matrix must be square and nonempty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            );
        }
        let defect = linalg::hermiticity_defect(&matrix);
        if defect > STATE_TOL {
            bail!(InvalidState, "not Hermitian (max deviation {defect:e})");
        }
        let tr = linalg::trace(&matrix);
        if (tr - c(1.0, 0.0)).norm() > STATE_TOL {
            bail!(InvalidState, "trace is {} instead of 1", tr);
        }
        let matrix = linalg::hermitize(&matrix);
        let min = linalg::eigh(&matrix).min_value();
        if min < -STATE_TOL {
            bail!(InvalidState, "not positive semidefinite (min eigenvalue {min:e})");
        }
        Ok(Self { matrix })
    }

    /// Wraps a matrix known to be a state up to rounding; only symmetrizes.
    pub fn from_hermitian_unchecked(matrix: CMatrix) -> Self {
        Self {
            matrix: linalg::hermitize(&matrix),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: linalg::identity(dim) * c(1.0 / dim as f64, 0.0),
        }
    }

    /// Diagonal state with the given weights.
    pub fn diagonal(weights: &[f64]) -> Result<Self> {
        ProbabilityDistribution::new(weights.to_vec())?;
        Ok(Self {
            matrix: linalg::diag_real(weights),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::eigvalsh(&self.matrix)
    }

    pub fn tensor(&self, other: &DensityOperator) -> DensityOperator {
        Self {
            matrix: linalg::kron(&self.matrix, &other.matrix),
        }
    }

    /// `u ρ u†` for a unitary `u` of matching size.
    pub fn conjugated(&self, u: &CMatrix) -> Result<DensityOperator> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            bail!(Shape, "unitary is {}x{}, state has dim {}", u.nrows(), u.ncols(), self.dim());
        }
        Ok(Self::from_hermitian_unchecked(linalg::conjugate(u, &self.matrix)))
    }

    /// Convex combination `w·self + (1−w)·other`.
    pub fn mix(&self, other: &DensityOperator, w: f64) -> Result<DensityOperator> {
        if self.dim() != other.dim() {
            bail!(Shape, "cannot mix dims {} and {}", self.dim(), other.dim());
        }
        if !(0.0..=1.0).contains(&w) {
            bail!(Domain, "mixing weight {w} outside [0, 1]");
        }
        Ok(Self {
            matrix: &self.matrix * c(w, 0.0) + &other.matrix * c(1.0 - w, 0.0),
        })
    }
}

impl From<&PureState> for DensityOperator {
    fn from(psi: &PureState) -> Self {
        psi.projector()
    }
}

/// A unit vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: CVector,
}

impl PureState {
    /// Requires the norm to be within [`NORM_TOL`] of 1.
    pub fn new(amplitudes: CVector) -> Result<Self> {
        if amplitudes.is_empty() {
            bail!(Shape, "pure state needs at least one amplitude");
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            bail!(InvalidState, "amplitude vector has norm {norm}, expected 1");
        }
        Ok(Self { amplitudes })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if amplitudes.is_empty() || norm == 0.0 || !norm.is_finite() {
            bail!(InvalidState, "cannot normalize a zero or non-finite vector");
        }
        Ok(Self {
            amplitudes: amplitudes / c(norm, 0.0),
        })
    }

    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            bail!(Domain, "basis index {k} out of range for dim {dim}");
        }
        Ok(Self {
            amplitudes: linalg::basis_vector(dim, k),
        })
    }

    /// `Σ_k sqrt(w_k) |k⟩` with real nonnegative amplitudes.
    pub fn from_weights(weights: &ProbabilityDistribution) -> Self {
        Self {
            amplitudes: CVector::from_iterator(
                weights.len(),
                weights.weights().iter().map(|w| c(w.max(0.0).sqrt(), 0.0)),
            ),
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn projector(&self) -> DensityOperator {
        DensityOperator::from_hermitian_unchecked(linalg::outer(&self.amplitudes, &self.amplitudes))
    }

    pub fn inner(&self, other: &PureState) -> crate::linalg::C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn tensor(&self, other: &PureState) -> PureState {
        Self {
            amplitudes: linalg::kron_vec(&self.amplitudes, &other.amplitudes),
        }
    }
}

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    weights: Vec<f64>,
}

impl ProbabilityDistribution {
    /// Weights down to `-DISTRIBUTION_TOL` are accepted and clamped to zero.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            bail!(InvalidDistribution, "empty distribution");
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
            bail!(InvalidDistribution, "non-finite weight {w}");
        }
        if let Some(w) = weights.iter().find(|&&w| w < -DISTRIBUTION_TOL) {
            bail!(InvalidDistribution, "negative weight {w}");
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > DISTRIBUTION_TOL {
            bail!(InvalidDistribution, "weights sum to {total}, expected 1");
        }
        Ok(Self {
            weights: weights.into_iter().map(|w| w.max(0.0)).collect(),
        })
    }

    /// Normalizes nonnegative raw weights.
    pub fn from_unnormalized(raw: Vec<f64>) -> Result<Self> {
        let total: f64 = raw.iter().sum();
        if !(total > 0.0) || raw.iter().any(|&w| w < 0.0) {
            bail!(InvalidDistribution, "cannot normalize weights with sum {total}");
        }
        Self::new(raw.into_iter().map(|w| w / total).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            bail!(InvalidDistribution, "uniform distribution over zero outcomes");
        }
        Ok(Self {
            weights: alloc::vec![1.0 / n as f64; n],
        })
    }

    pub fn point_mass(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            bail!(InvalidDistribution, "point mass index {k} out of range {n}");
        }
        let mut weights = alloc::vec![0.0; n];
        weights[k] = 1.0;
        Ok(Self { weights })
    }

    /// `(1 − p, p)` over outcomes 0 and 1.
    pub fn bernoulli(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            bail!(Domain, "Bernoulli parameter {p} outside [0, 1]");
        }
        Self::new(alloc::vec![1.0 - p, p])
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.weights.iter().enumerate().map(|(k, w)| k as f64 * w).sum()
    }

    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.weights
            .iter()
            .enumerate()
            .map(|(k, w)| w * (k as f64 - mean) * (k as f64 - mean))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.1, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        assert!(matches!(DensityOperator::new(m), Err(Error::InvalidState(_))));
    }

    #[test]
    fn rejects_negative_spectrum() {
        let m = linalg::diag_real(&[1.5, -0.5]);
        assert!(matches!(DensityOperator::new(m), Err(Error::InvalidState(_))));
    }

    #[test]
    fn rejects_bad_trace() {
        let m = linalg::diag_real(&[0.5, 0.4]);
        assert!(DensityOperator::new(m).is_err());
    }

    #[test]
    fn pure_state_norm_enforced() {
        let v = CVector::from_vec(alloc::vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(PureState::new(v.clone()).is_err());
        let psi = PureState::normalized(v).unwrap();
        assert!((psi.amplitudes().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn distribution_validation() {
        assert!(ProbabilityDistribution::new(alloc::vec![0.5, 0.5]).is_ok());
        assert!(ProbabilityDistribution::new(alloc::vec![1.2, -0.2]).is_err());
        assert!(ProbabilityDistribution::new(alloc::vec![0.5, 0.6]).is_err());
        let tiny = ProbabilityDistribution::new(alloc::vec![1.0 + 1e-12, -1e-12]).unwrap();
        assert_eq!(tiny.weights()[1], 0.0);
    }

    #[test]
    fn bernoulli_moments() {
        let b = ProbabilityDistribution::bernoulli(0.5).unwrap();
        assert!((b.mean() - 0.5).abs() < 1e-15);
        assert!((b.variance() - 0.25).abs() < 1e-15);
    }
}
