//! Dense complex linear algebra shared by every module.
//!
//! Everything spectral goes through [`eigh`], a Hermitian eigendecomposition
//! on the symmetrized input.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

pub fn diag_real(values: &[f64]) -> CMatrix {
    let mut m = CMatrix::zeros(values.len(), values.len());
    for (i, v) in values.iter().enumerate() {
        m[(i, i)] = c(*v, 0.0);
    }
    m
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, c(0.0, -1.0), c(0.0, 1.0), ZERO])
}

pub fn pauli_z() -> CMatrix {
    diag_real(&[1.0, -1.0])
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn kron_vec(a: &CVector, b: &CVector) -> CVector {
    a.kronecker(b)
}

/// `m^{⊗n}`; `n = 0` gives the 1×1 identity.
pub fn kron_power(m: &CMatrix, n: usize) -> CMatrix {
    let mut out = identity(1);
    for _ in 0..n {
        out = kron(&out, m);
    }
    out
}

pub fn trace(m: &CMatrix) -> C64 {
    m.diagonal().iter().sum()
}

/// `Tr(a b)` without forming the product.
pub fn trace_of_product(a: &CMatrix, b: &CMatrix) -> C64 {
    let n = a.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for k in 0..n {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

pub fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * c(0.5, 0.0)
}

pub fn unitarity_defect(u: &CMatrix) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    max_abs_diff(&(u.adjoint() * u), &identity(u.nrows()))
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigh {
    /// Eigenvalues in the order returned by the solver.
    pub values: Vec<f64>,
    /// Unitary whose columns are the matching eigenvectors.
    pub vectors: CMatrix,
}

impl Eigh {
    /// `V f(Λ) V†`.
    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> CMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for (j, &lambda) in self.values.iter().enumerate() {
            let fj = f(lambda);
            for i in 0..n {
                scaled[(i, j)] *= fj;
            }
        }
        scaled * self.vectors.adjoint()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Hermitian eigendecomposition. The input is symmetrized first so small
/// anti-Hermitian rounding noise does not leak into the spectrum.
pub fn eigh(m: &CMatrix) -> Eigh {
    let eig = SymmetricEigen::new(hermitize(m));
    Eigh {
        values: eig.eigenvalues.iter().copied().collect(),
        vectors: eig.eigenvectors,
    }
}

pub fn eigvalsh(m: &CMatrix) -> Vec<f64> {
    eigh(m).values
}

/// `e^{iH}` for Hermitian `H`.
pub fn expm_i_hermitian(h: &CMatrix) -> CMatrix {
    let eig = eigh(h);
    let n = eig.values.len();
    let mut scaled = eig.vectors.clone();
    for (j, &lambda) in eig.values.iter().enumerate() {
        let phase = C64::from_polar(1.0, lambda);
        for i in 0..n {
            scaled[(i, j)] *= phase;
        }
    }
    scaled * eig.vectors.adjoint()
}

/// Outer product `|a⟩⟨b|`.
pub fn outer(a: &CVector, b: &CVector) -> CMatrix {
    a * b.adjoint()
}

pub fn basis_vector(dim: usize, k: usize) -> CVector {
    let mut v = CVector::zeros(dim);
    v[k] = ONE;
    v
}

/// Promote a real matrix to a complex one.
pub fn complexify(m: &DMatrix<f64>) -> CMatrix {
    m.map(|x| c(x, 0.0))
}

/// Conjugate `u m u†`.
pub fn conjugate(u: &CMatrix, m: &CMatrix) -> CMatrix {
    u * m * u.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_reconstructs_hermitian_input() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[
                c(2.0, 0.0),
                c(0.5, 0.25),
                c(0.0, -1.0),
                c(0.5, -0.25),
                c(1.0, 0.0),
                c(0.3, 0.0),
                c(0.0, 1.0),
                c(0.3, 0.0),
                c(-1.0, 0.0),
            ],
        );
        let eig = eigh(&m);
        assert!(max_abs_diff(&eig.map(|x| x), &m) < 1e-12);
        assert!(unitarity_defect(&eig.vectors) < 1e-12);
    }

    #[test]
    fn exponential_of_pauli() {
        let t = 0.7;
        let u = expm_i_hermitian(&(pauli_x() * c(t, 0.0)));
        let expected = identity(2) * c(t.cos(), 0.0) + pauli_x() * c(0.0, t.sin());
        assert!(max_abs_diff(&u, &expected) < 1e-12);
    }

    #[test]
    fn kron_power_dimensions() {
        assert_eq!(kron_power(&pauli_z(), 3).nrows(), 8);
        assert_eq!(kron_power(&pauli_z(), 0).nrows(), 1);
    }
}
