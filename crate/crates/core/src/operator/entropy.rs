//! Entropic functionals, all in bits.

#[allow(unused_imports)]
use num_traits::Float;

use super::state::{DensityOperator, ProbabilityDistribution};
use crate::error::{bail, Result};
use crate::linalg;

/// Eigenvalues at or below this count as outside the support.
pub const EIGEN_CUTOFF: f64 = 1e-12;
/// Weight a state may place outside the reference support before the
/// relative entropy is declared infinite.
pub const SUPPORT_LEAK_TOL: f64 = 1e-10;

fn eta(x: f64) -> f64 {
    if x <= EIGEN_CUTOFF {
        0.0
    } else {
        -x * x.log2()
    }
}

/// `−Σ λ log₂ λ` over a spectrum, dropping eigenvalues at or below the cutoff.
pub fn entropy_of_spectrum(spectrum: &[f64]) -> f64 {
    spectrum.iter().map(|&x| eta(x)).sum()
}

pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    entropy_of_spectrum(&rho.eigenvalues())
}

/// `S(ρ‖σ) = Tr ρ log₂ ρ − Tr ρ log₂ σ`, or `f64::INFINITY` when the support
/// of `ρ` is not contained in that of `σ`.
pub fn relative_entropy(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        bail!(Shape, "relative entropy between dims {} and {}", rho.dim(), sigma.dim());
    }
    let eig = linalg::eigh(sigma.matrix());
    let rotated = eig.vectors.adjoint() * rho.matrix() * &eig.vectors;
    let mut cross = 0.0;
    let mut leak = 0.0;
    for (k, &lambda) in eig.values.iter().enumerate() {
        let weight = rotated[(k, k)].re;
        if lambda <= EIGEN_CUTOFF {
            leak += weight.max(0.0);
        } else {
            cross += weight * lambda.log2();
        }
    }
    if leak > SUPPORT_LEAK_TOL {
        return Ok(f64::INFINITY);
    }
    Ok(-von_neumann_entropy(rho) - cross)
}

pub fn shannon_entropy(p: &ProbabilityDistribution) -> f64 {
    p.weights().iter().map(|&w| if w > 0.0 { -w * w.log2() } else { 0.0 }).sum()
}

/// Shannon entropy of raw weights, validating them first.
pub fn shannon_entropy_of(weights: &[f64]) -> Result<f64> {
    Ok(shannon_entropy(&ProbabilityDistribution::new(weights.into())?))
}

/// `H₂(p) = −p log₂ p − (1−p) log₂(1−p)`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        bail!(Domain, "binary entropy argument {p} outside [0, 1]");
    }
    let h = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    Ok(h(p) + h(1.0 - p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{c, CVector};
    use crate::operator::PureState;
    use alloc::vec;

    fn plus() -> DensityOperator {
        PureState::normalized(CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0)]))
            .unwrap()
            .projector()
    }

    #[test]
    fn von_neumann_examples() {
        assert!((von_neumann_entropy(&DensityOperator::maximally_mixed(2)) - 1.0).abs() < 1e-12);
        assert!(von_neumann_entropy(&plus()).abs() < 1e-12);
        let rho = DensityOperator::diagonal(&[0.5, 0.0, 0.0, 0.5]).unwrap();
        assert!((von_neumann_entropy(&rho) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_examples() {
        let rho = plus();
        assert!(relative_entropy(&rho, &rho).unwrap().abs() < 1e-9);
        // |+⟩⟨+| has spectrum {1, 0}; against I/2 the cross term is log₂(1/2).
        let mixed = DensityOperator::maximally_mixed(2);
        assert!((relative_entropy(&rho, &mixed).unwrap() - 1.0).abs() < 1e-12);
        let zero = PureState::basis(2, 0).unwrap().projector();
        let one = PureState::basis(2, 1).unwrap().projector();
        assert_eq!(relative_entropy(&zero, &one).unwrap(), f64::INFINITY);
    }

    #[test]
    fn relative_entropy_shape_error() {
        let a = DensityOperator::maximally_mixed(2);
        let b = DensityOperator::maximally_mixed(3);
        assert!(matches!(relative_entropy(&a, &b), Err(Error::Shape(_))));
    }

    #[test]
    fn shannon_examples() {
        assert!((shannon_entropy_of(&[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(shannon_entropy_of(&[1.0, 0.0]).unwrap(), 0.0);
        assert!((shannon_entropy_of(&[0.25; 4]).unwrap() - 2.0).abs() < 1e-15);
        assert!(matches!(
            shannon_entropy_of(&[1.5, -0.5]),
            Err(Error::InvalidDistribution(_))
        ));
    }

    #[test]
    fn binary_entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        // Direct evaluation of the defining formula at 0.11.
        assert!((binary_entropy(0.11).unwrap() - 0.499915958164528).abs() < 1e-14);
        assert!(matches!(binary_entropy(1.5), Err(Error::Domain(_))));
    }
}
