//! Collective SU(2) action on `N` qubits and its Schur basis `|j, m, α⟩`.
//!
//! Qubit 0 is the most significant bit of a computational basis index and
//! `|0⟩` is spin up, so `J_z` on a basis string is `(#zeros − #ones)/2`.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
#[allow(unused_imports)]
use num_traits::Float;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix};

use super::combinatorics::multiplicity_dimension;

/// Largest supported qubit count.
pub const MAX_QUBITS: u32 = 12;

/// Label of one Schur basis vector. `j` is an integer because `N` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchurLabel {
    pub j: u32,
    pub m: i32,
    pub alpha: usize,
}

/// Location of the `H_j = M_j ⊗ N_j` block inside the Schur basis.
///
/// Column `offset + (j − m)·multiplicity + α` holds `|j, m, α⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinSector {
    pub j: u32,
    pub multiplicity: usize,
    pub offset: usize,
}

impl SpinSector {
    pub fn irrep_dim(&self) -> usize {
        2 * self.j as usize + 1
    }

    pub fn block_dim(&self) -> usize {
        self.irrep_dim() * self.multiplicity
    }

    pub fn column(&self, m: i32, alpha: usize) -> usize {
        self.offset + (self.j as i32 - m) as usize * self.multiplicity + alpha
    }
}

#[derive(Debug, Clone)]
pub struct CollectiveSpinRep {
    n_qubits: u32,
    sectors: Vec<SpinSector>,
    labels: Vec<SchurLabel>,
    basis: CMatrix,
}

fn lower(v: &DVector<f64>, n_qubits: u32) -> DVector<f64> {
    let mut out = DVector::zeros(v.len());
    for (x, &amp) in v.iter().enumerate() {
        if amp == 0.0 {
            continue;
        }
        for bit in 0..n_qubits {
            let mask = 1usize << bit;
            if x & mask == 0 {
                out[x | mask] += amp;
            }
        }
    }
    out
}

impl CollectiveSpinRep {
    /// Builds the Schur basis by highest-weight vectors and `J₋` recursion.
    ///
    /// For each `j`, the `m = j` weight space is spanned by strings with
    /// `N/2 − j` ones. `J²` is diagonalized there and its `j(j+1)` eigenspace
    /// is re-orthonormalized by Gram–Schmidt on the projected basis strings in
    /// increasing index order, which fixes the `α` labels deterministically.
    pub fn build(n_qubits: u32, budget: &DimensionBudget) -> Result<Self> {
        if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
            bail!(Domain, "collective spin needs an even positive qubit count, got {n_qubits}");
        }
        if n_qubits > MAX_QUBITS {
            return Err(crate::error::Error::ResourceLimit {
                what: "collective spin qubits",
                needed: n_qubits as u128,
                cap: MAX_QUBITS as usize,
            });
        }
        let dim = budget.power("collective spin", 2, n_qubits)?;
        let half = n_qubits / 2;

        let mut sectors = Vec::new();
        let mut labels = Vec::with_capacity(dim);
        let mut basis = CMatrix::zeros(dim, dim);
        let mut offset = 0;

        for j in (0..=half).rev() {
            let ones = half - j;
            let weight_space: Vec<usize> = (0..dim).filter(|x| x.count_ones() == ones).collect();
            let size = weight_space.len();
            let position = |x: usize| weight_space.binary_search(&x).ok();

            // J² = J₋J₊ + J_z² + J_z restricted to the m = j weight space.
            // J₋J₊ has `ones` on the diagonal and 1 between strings that
            // differ by moving a single 1.
            let jf = j as f64;
            let mut j2 = DMatrix::<f64>::from_diagonal_element(size, size, ones as f64 + jf * jf + jf);
            for (col, &y) in weight_space.iter().enumerate() {
                for from in 0..n_qubits {
                    if y & (1 << from) == 0 {
                        continue;
                    }
                    for to in 0..n_qubits {
                        if y & (1 << to) != 0 {
                            continue;
                        }
                        let x = (y & !(1 << from)) | (1 << to);
                        if let Some(row) = position(x) {
                            j2[(row, col)] += 1.0;
                        }
                    }
                }
            }
            let eig = SymmetricEigen::new(j2);
            let target = jf * (jf + 1.0);
            let selected: Vec<usize> = (0..size)
                .filter(|&k| (eig.eigenvalues[k] - target).abs() < 1e-6)
                .collect();
            let multiplicity = multiplicity_dimension(n_qubits, j)? as usize;
            if selected.len() != multiplicity {
                bail!(
                    InvalidRepresentation,
                    "found {} highest-weight vectors for j = {j}, expected {multiplicity}",
                    selected.len()
                );
            }
            let eigenspace = eig.eigenvectors.select_columns(&selected);

            let mut highest: Vec<DVector<f64>> = Vec::with_capacity(multiplicity);
            for row in 0..size {
                if highest.len() == multiplicity {
                    break;
                }
                let mut v: DVector<f64> = &eigenspace * eigenspace.row(row).transpose();
                for h in &highest {
                    let overlap = h.dot(&v);
                    v -= h * overlap;
                }
                let norm = v.norm();
                if norm > 1e-6 {
                    highest.push(v / norm);
                }
            }
            if highest.len() != multiplicity {
                bail!(InvalidRepresentation, "could not orthonormalize the j = {j} highest-weight space");
            }

            let sector = SpinSector { j, multiplicity, offset };
            for (alpha, h) in highest.iter().enumerate() {
                let mut v = DVector::<f64>::zeros(dim);
                for (k, &x) in weight_space.iter().enumerate() {
                    v[x] = h[k];
                }
                let mut m = j as i32;
                loop {
                    let col = sector.column(m, alpha);
                    basis.set_column(col, &v.map(|x| c(x, 0.0)));
                    if m == -(j as i32) {
                        break;
                    }
                    let lowered = lower(&v, n_qubits);
                    let norm = lowered.norm();
                    v = lowered / norm;
                    m -= 1;
                }
            }
            for m in (-(j as i32)..=j as i32).rev() {
                for alpha in 0..multiplicity {
                    labels.push(SchurLabel { j, m, alpha });
                }
            }
            offset += sector.block_dim();
            sectors.push(sector);
        }
        debug_assert_eq!(offset, dim);
        Ok(Self {
            n_qubits,
            sectors,
            labels,
            basis,
        })
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn j_max(&self) -> u32 {
        self.n_qubits / 2
    }

    /// Sectors in decreasing `j`.
    pub fn sectors(&self) -> &[SpinSector] {
        &self.sectors
    }

    pub fn sector(&self, j: u32) -> Option<&SpinSector> {
        self.sectors.iter().find(|s| s.j == j)
    }

    /// Label of each basis column.
    pub fn labels(&self) -> &[SchurLabel] {
        &self.labels
    }

    /// Unitary whose columns are the Schur basis vectors.
    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn vector(&self, j: u32, m: i32, alpha: usize) -> Option<crate::linalg::CVector> {
        let s = self.sector(j)?;
        if m.unsigned_abs() > j || alpha >= s.multiplicity {
            return None;
        }
        Some(self.basis.column(s.column(m, alpha)).into_owned())
    }

    /// Same representation with the multiplicity space of `j` rotated by
    /// `u` (a `dim N_j` unitary): `|j,m,α⟩ ↦ Σ_β u[β,α] |j,m,β⟩`.
    pub fn with_multiplicity_rotation(&self, j: u32, u: &CMatrix) -> Result<Self> {
        let Some(s) = self.sector(j).copied() else {
            bail!(Domain, "no sector with j = {j}");
        };
        if u.nrows() != s.multiplicity || u.ncols() != s.multiplicity {
            bail!(Shape, "multiplicity rotation must be {0}x{0}", s.multiplicity);
        }
        let mut out = self.clone();
        for m in -(j as i32)..=j as i32 {
            for alpha in 0..s.multiplicity {
                let mut col = crate::linalg::CVector::zeros(self.dim());
                for beta in 0..s.multiplicity {
                    col += self.basis.column(s.column(m, beta)) * u[(beta, alpha)];
                }
                out.basis.set_column(s.column(m, alpha), &col);
            }
        }
        Ok(out)
    }

    fn collective(&self, single: &CMatrix) -> CMatrix {
        let n = self.n_qubits as usize;
        let mut total = CMatrix::zeros(self.dim(), self.dim());
        for site in 0..n {
            let left = linalg::identity(1 << site);
            let right = linalg::identity(1 << (n - site - 1));
            total += linalg::kron(&linalg::kron(&left, single), &right);
        }
        total * c(0.5, 0.0)
    }

    pub fn jx(&self) -> CMatrix {
        self.collective(&linalg::pauli_x())
    }

    pub fn jy(&self) -> CMatrix {
        self.collective(&linalg::pauli_y())
    }

    pub fn jz(&self) -> CMatrix {
        self.collective(&linalg::pauli_z())
    }

    pub fn j_minus(&self) -> CMatrix {
        self.jx() - self.jy() * c(0.0, 1.0)
    }

    pub fn j_squared(&self) -> CMatrix {
        let (x, y, z) = (self.jx(), self.jy(), self.jz());
        &x * &x + &y * &y + &z * &z
    }

    /// `e^{i J⃗·θ}`, built as the `N`-fold tensor power of `e^{i σ⃗·θ/2}`.
    pub fn rotation(&self, theta: [f64; 3]) -> CMatrix {
        let generator = (linalg::pauli_x() * c(theta[0], 0.0)
            + linalg::pauli_y() * c(theta[1], 0.0)
            + linalg::pauli_z() * c(theta[2], 0.0))
            * c(0.5, 0.0);
        linalg::kron_power(&linalg::expm_i_hermitian(&generator), self.n_qubits as usize)
    }

    /// `B† m B`: a computational-basis operator in Schur coordinates.
    pub fn to_schur(&self, m: &CMatrix) -> CMatrix {
        self.basis.adjoint() * m * &self.basis
    }

    pub fn from_schur(&self, m: &CMatrix) -> CMatrix {
        &self.basis * m * self.basis.adjoint()
    }
}
