use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::group::{ChargeGrading, CollectiveSpinRep};
use crate::linalg::{c, CVector};
use crate::operator::{ProbabilityDistribution, PureState};

/// Which family to build a maximal-asymmetry state for.
#[derive(Debug, Clone, Copy)]
pub enum ExtremalFamily<'a> {
    /// Charges `0..=n_max`, one basis vector each.
    U1 { n_max: u64 },
    Su2(&'a CollectiveSpinRep),
}

/// `Σ_q dim M_q · min(dim M_q, dim N_q)`: the largest support a twirled pure
/// state can have under collective SU(2).
pub fn su2_maximal_support(rep: &CollectiveSpinRep) -> usize {
    rep.sectors()
        .iter()
        .map(|s| s.irrep_dim() * s.irrep_dim().min(s.multiplicity))
        .sum()
}

/// Uniform superposition of charges `0..=n_max`, with its grading.
pub fn maximal_u1_state(n_max: u64) -> Result<(ChargeGrading, PureState)> {
    if n_max >= (1 << 20) {
        bail!(Domain, "n_max = {n_max} is beyond any supported dimension");
    }
    let grading = ChargeGrading::ladder(n_max);
    let state = PureState::from_weights(&ProbabilityDistribution::uniform(n_max as usize + 1)?);
    Ok((grading, state))
}

/// `(1/√d*) Σ_j sqrt(dim M_j · d_j) |ψ_j⟩` with
/// `|ψ_j⟩ = Σ_{k<d_j} d_j^{-1/2} |j, m = j − k⟩ ⊗ |α = k⟩` and
/// `d_j = min(dim M_j, dim N_j)`.
pub fn maximal_su2_state(rep: &CollectiveSpinRep) -> PureState {
    let d_star = su2_maximal_support(rep) as f64;
    let mut coeffs = CVector::zeros(rep.dim());
    for s in rep.sectors() {
        let d = s.irrep_dim().min(s.multiplicity);
        let amp = ((s.irrep_dim() * d) as f64 / d_star).sqrt() / (d as f64).sqrt();
        for k in 0..d {
            coeffs[s.column(s.j as i32 - k as i32, k)] = c(amp, 0.0);
        }
    }
    PureState::normalized(rep.basis() * coeffs).expect("maximal state is nonzero")
}

pub fn maximal_asymmetry_state(family: ExtremalFamily<'_>) -> Result<PureState> {
    match family {
        ExtremalFamily::U1 { n_max } => maximal_u1_state(n_max).map(|(_, s)| s),
        ExtremalFamily::Su2(rep) => Ok(maximal_su2_state(rep)),
    }
}

/// `(dim M_j, d_j)` for each sector, highest `j` first.
pub fn su2_pairing_sizes(rep: &CollectiveSpinRep) -> Vec<(usize, usize)> {
    rep.sectors()
        .iter()
        .map(|s| (s.irrep_dim(), s.irrep_dim().min(s.multiplicity)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DimensionBudget;

    #[test]
    fn support_matches_closed_form() {
        for n in [2u32, 4, 6, 8] {
            let rep = CollectiveSpinRep::build(n, &DimensionBudget::default()).unwrap();
            let j = (n / 2) as usize;
            let closed = (4 * j * j * j + 5 * j + 3) / 3;
            assert_eq!(su2_maximal_support(&rep), closed);
        }
    }

    #[test]
    fn two_qubit_state_weights() {
        let rep = CollectiveSpinRep::build(2, &DimensionBudget::default()).unwrap();
        let psi = maximal_su2_state(&rep);
        let triplet = rep.vector(1, 1, 0).unwrap();
        let singlet = rep.vector(0, 0, 0).unwrap();
        assert!((psi.amplitudes().dotc(&triplet).norm() - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((psi.amplitudes().dotc(&singlet).norm() - 0.5).abs() < 1e-12);
    }
}
