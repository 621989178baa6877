//! Fixed points, image/fixed-set equivalence and the entropy-gap distance
//! for unital idempotent channels.

use rand::Rng;

use crate::error::{bail, Result};
use crate::linalg::{self, CMatrix};
use crate::operator::{relative_entropy, von_neumann_entropy, DensityOperator};
use crate::random;

use super::KrausChannel;

/// Tolerance on commutators and state-level fixed-point tests.
pub const FIXED_POINT_TOL: f64 = 1e-9;

/// Whether `τ` lies in the commutant of `{E_a, E_a†}`, which for a unital
/// channel is its fixed-point algebra.
pub fn commutant_fixed_point_check(ch: &KrausChannel, tau: &CMatrix) -> Result<bool> {
    if !ch.is_unital() {
        bail!(Precondition, "commutant characterization needs a unital channel");
    }
    if tau.nrows() != ch.dim() || tau.ncols() != ch.dim() {
        bail!(Shape, "operator is {}x{}, channel acts on dim {}", tau.nrows(), tau.ncols(), ch.dim());
    }
    Ok(ch.kraus().iter().all(|k| {
        linalg::max_abs(&linalg::commutator(tau, k)) <= FIXED_POINT_TOL
            && linalg::max_abs(&linalg::commutator(tau, &k.adjoint())) <= FIXED_POINT_TOL
    }))
}

/// Outcome of sampling `E(E(ρ)) = E(ρ)` against the superoperator test.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageFixReport {
    pub samples: usize,
    /// Samples whose image was not a fixed point.
    pub unfixed: usize,
    pub max_defect: f64,
    pub idempotent: bool,
}

impl ImageFixReport {
    pub fn all_fixed(&self) -> bool {
        self.unfixed == 0
    }

    /// Image ⊆ Fix on every sample exactly when the channel is idempotent.
    pub fn consistent(&self) -> bool {
        self.all_fixed() == self.idempotent
    }
}

pub fn image_fix_equivalence_check(ch: &KrausChannel, samples: usize, seed: u64) -> ImageFixReport {
    let mut unfixed = 0;
    let mut max_defect: f64 = 0.0;
    for i in 0..samples {
        let mut rng = random::stream(seed, i as u64);
        let rho = random::random_density(&mut rng, ch.dim());
        let once = ch.apply_matrix(rho.matrix()).expect("sample has channel dimension");
        let twice = ch.apply_matrix(&once).expect("sample has channel dimension");
        let defect = linalg::max_abs_diff(&once, &twice);
        max_defect = max_defect.max(defect);
        if defect > FIXED_POINT_TOL {
            unfixed += 1;
        }
    }
    ImageFixReport {
        samples,
        unfixed,
        max_defect,
        idempotent: ch.is_idempotent(),
    }
}

/// `S(E(ρ)) − S(ρ)`: the relative-entropy distance from `ρ` to the image of a
/// unital idempotent channel, attained at `E(ρ)`.
pub fn theorem1_distance(ch: &KrausChannel, rho: &DensityOperator) -> Result<f64> {
    if !ch.is_unital() {
        bail!(TheoremInapplicable, "channel is not unital (defect {:e})", ch.unitality_defect());
    }
    if !ch.is_idempotent() {
        bail!(TheoremInapplicable, "channel is not idempotent (defect {:e})", ch.idempotence_defect());
    }
    let image = ch.apply(rho)?;
    Ok(von_neumann_entropy(&image) - von_neumann_entropy(rho))
}

/// `S(E(ρ)) − S(ρ)` next to relative entropies from `ρ` to image states.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationCheck {
    pub distance: f64,
    /// `S(ρ‖E(ρ))`.
    pub at_image: f64,
    /// Smallest `S(ρ‖E(τ))` over random `τ`.
    pub sampled_min: f64,
    pub samples: usize,
}

impl MinimizationCheck {
    /// No sampled image state beats `E(ρ)`, and `E(ρ)` attains the distance.
    pub fn holds(&self, tol: f64) -> bool {
        self.sampled_min >= self.distance - tol && (self.at_image - self.distance).abs() <= tol
    }
}

/// Compares [`theorem1_distance`] with `S(ρ‖σ)` for `σ = E(ρ)` and for
/// `σ = E(τ)` over `samples` random `τ` of random rank.
pub fn minimization_check(ch: &KrausChannel, rho: &DensityOperator, samples: usize, seed: u64) -> Result<MinimizationCheck> {
    let distance = theorem1_distance(ch, rho)?;
    let at_image = relative_entropy(rho, &ch.apply(rho)?)?;
    let mut sampled_min = f64::INFINITY;
    for i in 0..samples {
        let mut rng = random::stream(seed, i as u64);
        let rank = rng.random_range(1..=ch.dim());
        let tau = random::random_density_with_rank(&mut rng, ch.dim(), rank);
        sampled_min = sampled_min.min(relative_entropy(rho, &ch.apply(&tau)?)?);
    }
    Ok(MinimizationCheck { distance, at_image, sampled_min, samples })
}
