use rand::Rng;

use crate::error::{bail, Result};
use crate::linalg;
use crate::operator::{entropy_of_spectrum, relative_entropy, von_neumann_entropy, DensityOperator};
use crate::random;

use super::TwirlOperation;

/// Twirl fixed-point distance below which a state counts as invariant.
pub const INVARIANCE_TOL: f64 = 1e-8;

/// `A_G(ρ) = S(𝒢(ρ)) − S(ρ)` together with its ingredients.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymmetryResult {
    pub asymmetry: f64,
    pub twirled_state: DensityOperator,
    pub entropy_in: f64,
    pub entropy_out: f64,
}

impl AsymmetryResult {
    /// Invariance certified by the twirl moving `ρ` by at most
    /// [`INVARIANCE_TOL`] entrywise, not by the entropy gap.
    pub fn is_invariant(&self, rho: &DensityOperator) -> bool {
        linalg::max_abs_diff(self.twirled_state.matrix(), rho.matrix()) <= INVARIANCE_TOL
    }
}

pub fn g_asymmetry(t: &TwirlOperation<'_>, rho: &DensityOperator) -> Result<AsymmetryResult> {
    let twirled_state = t.apply(rho)?;
    let entropy_in = von_neumann_entropy(rho);
    let entropy_out = entropy_of_spectrum(&t.twirled_spectrum(twirled_state.matrix())?);
    Ok(AsymmetryResult {
        asymmetry: entropy_out - entropy_in,
        twirled_state,
        entropy_in,
        entropy_out,
    })
}

/// Relative-entropy distance from `ρ` to the nearest invariant state, which
/// is attained at `𝒢(ρ)` and equals the asymmetry.
pub fn relative_entropy_of_frameness(t: &TwirlOperation<'_>, rho: &DensityOperator) -> Result<f64> {
    g_asymmetry(t, rho).map(|r| r.asymmetry)
}

/// Brute-force minimum of `S(ρ‖σ)` over sampled invariant states.
///
/// Candidates are `𝒢(ρ)` itself, `𝒢(τ)` for random states `τ` (the image of
/// the twirl is the invariant set), and random mixtures of the two. Trial
/// `i` draws from stream `i` of `seed`.
pub fn invariant_state_oracle(t: &TwirlOperation<'_>, rho: &DensityOperator, trials: usize, seed: u64) -> Result<f64> {
    if trials == 0 {
        bail!(Domain, "oracle needs at least one trial");
    }
    let center = t.apply(rho)?;
    let mut best = relative_entropy(rho, &center)?;
    for trial in 0..trials {
        let mut rng = random::stream(seed, trial as u64);
        let rank = rng.random_range(1..=t.dim());
        let tau = random::random_density_with_rank(&mut rng, t.dim(), rank);
        let sigma = t.apply(&tau)?;
        best = best.min(relative_entropy(rho, &sigma)?);
        let w: f64 = rng.random_range(0.0..1.0);
        let mixed = center.mix(&sigma, w)?;
        best = best.min(relative_entropy(rho, &mixed)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ChargeGrading, FiniteGroupRep};
    use crate::linalg::{c, CVector};
    use crate::operator::PureState;

    fn plus() -> DensityOperator {
        PureState::normalized(CVector::from_element(2, c(1.0, 0.0))).unwrap().projector()
    }

    #[test]
    fn invariant_states_have_zero_asymmetry() {
        let rep = FiniteGroupRep::z2_phase_flip();
        let t = TwirlOperation::Finite(&rep);
        let sigma = DensityOperator::diagonal(&[0.3, 0.7]).unwrap();
        let r = g_asymmetry(&t, &sigma).unwrap();
        assert!(r.asymmetry.abs() < 1e-9);
        assert!(r.is_invariant(&sigma));
    }

    #[test]
    fn uniform_four_charge_state() {
        let grading = ChargeGrading::ladder(3);
        let psi = PureState::normalized(CVector::from_element(4, c(1.0, 0.0))).unwrap().projector();
        let r = g_asymmetry(&TwirlOperation::U1(&grading), &psi).unwrap();
        assert!((r.asymmetry - 2.0).abs() < 1e-12);
        assert!((r.asymmetry - (r.entropy_out - r.entropy_in)).abs() < 1e-10);
    }

    #[test]
    fn oracle_examples() {
        let rep = FiniteGroupRep::z2_phase_flip();
        let t = TwirlOperation::Finite(&rep);
        let value = invariant_state_oracle(&t, &plus(), 100, 3).unwrap();
        assert!((value - 1.0).abs() < 1e-8);

        let sigma = DensityOperator::diagonal(&[0.3, 0.7]).unwrap();
        assert!(invariant_state_oracle(&t, &sigma, 20, 3).unwrap().abs() < 1e-9);

        let grading = ChargeGrading::ladder(2);
        let psi = PureState::normalized(CVector::from_element(3, c(1.0, 0.0))).unwrap().projector();
        let value = invariant_state_oracle(&TwirlOperation::U1(&grading), &psi, 50, 3).unwrap();
        assert!((value - 3f64.log2()).abs() < 1e-8);
    }

    #[test]
    fn oracle_rejects_zero_trials() {
        let rep = FiniteGroupRep::z2_phase_flip();
        assert!(invariant_state_oracle(&TwirlOperation::Finite(&rep), &plus(), 0, 0).is_err());
    }
}
