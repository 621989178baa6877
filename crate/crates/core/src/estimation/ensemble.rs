use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::frameness::{g_asymmetry, TwirlOperation};
use crate::group::FiniteGroupRep;
use crate::linalg::{self, c, CMatrix};
use crate::operator::{entropy_of_spectrum, von_neumann_entropy, DensityOperator};

use super::povm::DiscretePovm;

/// The states `ρ(g) = T(g)ρT(g)†`, one per group element, with uniform prior.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitEnsemble {
    states: Vec<DensityOperator>,
}

pub fn orbit_ensemble(rep: &FiniteGroupRep, rho: &DensityOperator) -> Result<OrbitEnsemble> {
    if rho.dim() != rep.dim() {
        bail!(Shape, "state has dim {}, representation has dim {}", rho.dim(), rep.dim());
    }
    let states = rep
        .unitaries()
        .iter()
        .map(|u| DensityOperator::from_hermitian_unchecked(linalg::conjugate(u, rho.matrix())))
        .collect();
    Ok(OrbitEnsemble { states })
}

impl OrbitEnsemble {
    pub fn states(&self) -> &[DensityOperator] {
        &self.states
    }

    pub fn size(&self) -> usize {
        self.states.len()
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn average(&self) -> CMatrix {
        let sum = self.states.iter().fold(CMatrix::zeros(self.dim(), self.dim()), |acc, s| acc + s.matrix());
        sum * c(1.0 / self.size() as f64, 0.0)
    }

    /// `χ = S(ρ̄) − (1/|G|)Σ_g S(ρ(g))`.
    pub fn holevo_chi(&self) -> f64 {
        let avg = entropy_of_spectrum(&linalg::eigvalsh(&self.average()));
        let mean = self.states.iter().map(von_neumann_entropy).sum::<f64>() / self.size() as f64;
        avg - mean
    }
}

/// `H(g′:g)` for outcome `g′` of `povm` on a uniformly drawn `ρ(g)`.
pub fn mutual_information(ens: &OrbitEnsemble, povm: &DiscretePovm) -> Result<f64> {
    if povm.dim() != ens.dim() {
        bail!(Shape, "POVM acts on dim {}, ensemble on dim {}", povm.dim(), ens.dim());
    }
    let prior = 1.0 / ens.size() as f64;
    let joint: Vec<Vec<f64>> = ens
        .states()
        .iter()
        .map(|s| povm.probabilities(s.matrix()).into_iter().map(|p| p * prior).collect())
        .collect();
    let mut marginal = alloc::vec![0.0; povm.outcomes()];
    for row in &joint {
        for (k, &p) in row.iter().enumerate() {
            marginal[k] += p;
        }
    }
    let mut info = 0.0;
    for row in &joint {
        let row_total: f64 = row.iter().sum();
        for (k, &p) in row.iter().enumerate() {
            if p > 0.0 && marginal[k] > 0.0 && row_total > 0.0 {
                info += p * (p / (row_total * marginal[k])).log2();
            }
        }
    }
    Ok(info.max(0.0))
}

/// Eigenvalue below which the ensemble average counts as singular.
const SRM_CUTOFF: f64 = 1e-12;

/// Effects `S^{-1/2}(ρ(g)/|G|)S^{-1/2}` with `S` the ensemble average, plus
/// an equal share of the projector onto the kernel of `S`.
pub fn square_root_measurement(ens: &OrbitEnsemble) -> Result<DiscretePovm> {
    let eig = linalg::eigh(&ens.average());
    let inv_sqrt = eig.map(|x| if x > SRM_CUTOFF { 1.0 / x.sqrt() } else { 0.0 });
    let kernel = eig.map(|x| if x > SRM_CUTOFF { 0.0 } else { 1.0 });
    let share = 1.0 / ens.size() as f64;
    let effects = ens
        .states()
        .iter()
        .map(|s| {
            let e = &inv_sqrt * s.matrix() * &inv_sqrt * c(share, 0.0) + &kernel * c(share, 0.0);
            linalg::hermitize(&e)
        })
        .collect();
    DiscretePovm::new(effects, "srm")
}

#[derive(Debug, Clone, PartialEq)]
pub struct HolevoReport {
    pub asymmetry: f64,
    pub chi: f64,
    /// `(label, H(g′:g))` for every POVM tried, the square-root measurement first.
    pub infos: Vec<(String, f64)>,
    pub best_info: f64,
    pub best_povm: String,
}

impl HolevoReport {
    /// `best_info / A_G`, undefined for invariant states.
    pub fn ratio(&self) -> Option<f64> {
        (self.asymmetry > 1e-12).then(|| self.best_info / self.asymmetry)
    }

    pub fn holds(&self) -> bool {
        self.infos.iter().all(|&(_, i)| i <= self.asymmetry + 1e-8)
    }
}

/// Mutual information of the square-root measurement and each of `povms`
/// on the orbit of `ρ`, against `A_G(ρ)`.
pub fn holevo_bound_check(rep: &FiniteGroupRep, rho: &DensityOperator, povms: &[DiscretePovm]) -> Result<HolevoReport> {
    let ens = orbit_ensemble(rep, rho)?;
    let asymmetry = g_asymmetry(&TwirlOperation::Finite(rep), rho)?.asymmetry;
    let srm = square_root_measurement(&ens)?;
    let mut infos = Vec::with_capacity(povms.len() + 1);
    for povm in core::iter::once(&srm).chain(povms) {
        infos.push((povm.label().into(), mutual_information(&ens, povm)?));
    }
    let mut best = 0;
    for (k, (_, info)) in infos.iter().enumerate() {
        if *info > infos[best].1 {
            best = k;
        }
    }
    let (best_povm, best_info) = infos[best].clone();
    Ok(HolevoReport { asymmetry, chi: ens.holevo_chi(), infos, best_info, best_povm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ChargeGrading;
    use crate::linalg::CVector;
    use crate::operator::PureState;
    use crate::random;

    fn plus() -> DensityOperator {
        PureState::normalized(CVector::from_element(2, c(1.0, 0.0))).unwrap().projector()
    }

    fn hadamard() -> CMatrix {
        let s = 1.0 / 2f64.sqrt();
        CMatrix::from_row_slice(2, 2, &[c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)])
    }

    #[test]
    fn z2_orbit_of_plus() {
        let rep = FiniteGroupRep::z2_phase_flip();
        let ens = orbit_ensemble(&rep, &plus()).unwrap();
        let minus = linalg::conjugate(&linalg::pauli_z(), plus().matrix());
        assert!(ens.states().iter().any(|s| linalg::max_abs_diff(s.matrix(), &minus) < 1e-15));
        let pm = DiscretePovm::projective(&hadamard(), "pm").unwrap();
        assert!((mutual_information(&ens, &pm).unwrap() - 1.0).abs() < 1e-12);
        assert!(mutual_information(&ens, &DiscretePovm::trivial(2)).unwrap().abs() < 1e-15);

        let srm = square_root_measurement(&ens).unwrap();
        for e in srm.effects() {
            let p = linalg::trace_of_product(e, plus().matrix()).re;
            assert!(p.abs() < 1e-12 || (p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn invariant_orbit_is_constant() {
        let rep = FiniteGroupRep::quaternion();
        let rho = DensityOperator::maximally_mixed(2);
        let ens = orbit_ensemble(&rep, &rho).unwrap();
        let srm = square_root_measurement(&ens).unwrap();
        for e in srm.effects() {
            assert!(linalg::max_abs_diff(e, &(linalg::identity(2) * c(0.125, 0.0))) < 1e-12);
        }
        let mut rng = random::stream(2, 0);
        let povm = DiscretePovm::random(&mut rng, 2, 3).unwrap();
        assert!(mutual_information(&ens, &povm).unwrap().abs() < 1e-12);
    }

    #[test]
    fn z4_subgroup_on_uniform_state() {
        let grading = ChargeGrading::ladder(3);
        let rep = FiniteGroupRep::cyclic_phase(&grading, 4).unwrap();
        let psi = PureState::normalized(CVector::from_element(4, c(1.0, 0.0))).unwrap().projector();
        let ens = orbit_ensemble(&rep, &psi).unwrap();
        for (a, sa) in ens.states().iter().enumerate() {
            for sb in &ens.states()[a + 1..] {
                assert!(linalg::trace_of_product(sa.matrix(), sb.matrix()).re < 1e-12);
            }
        }
        let report = holevo_bound_check(&rep, &psi, &[]).unwrap();
        assert!((report.asymmetry - 2.0).abs() < 1e-10);
        assert!(report.holds());
        assert!((report.best_info - 2.0).abs() < 1e-9);
        assert!((report.chi - report.asymmetry).abs() < 1e-9);
    }

    #[test]
    fn z2_srm_saturates() {
        let rep = FiniteGroupRep::z2_phase_flip();
        let report = holevo_bound_check(&rep, &plus(), &[DiscretePovm::trivial(2)]).unwrap();
        assert!((report.best_info - 1.0).abs() < 1e-10);
        assert_eq!(report.best_povm, "srm");
        assert!((report.ratio().unwrap() - 1.0).abs() < 1e-10);
    }
}
