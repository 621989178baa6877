use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix};
use crate::operator::{DensityOperator, Subsystem};

/// Tolerance on `Σ E_a† E_a = I`.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Tolerance on `‖E(I) − I‖`.
pub const UNITAL_TOL: f64 = 1e-9;
/// Tolerance on `‖M² − M‖` for the superoperator `M`; squaring doubles the
/// rounding, so this is looser than the state-level tolerances.
pub const IDEMPOTENT_TOL: f64 = 1e-8;

/// A trace-preserving completely positive map `ρ ↦ Σ_a E_a ρ E_a†`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    dim: usize,
    kraus: Vec<CMatrix>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let Some(first) = kraus.first() else {
            bail!(InvalidChannel, "no Kraus operators");
        };
        let dim = first.nrows();
        if dim == 0 || kraus.iter().any(|k| k.nrows() != dim || k.ncols() != dim) {
            bail!(InvalidChannel, "Kraus operators must be square with a common size");
        }
        let mut sum = CMatrix::zeros(dim, dim);
        for k in &kraus {
            sum += k.adjoint() * k;
        }
        let defect = linalg::max_abs_diff(&sum, &linalg::identity(dim));
        if defect > COMPLETENESS_TOL {
            bail!(InvalidChannel, "not trace preserving (completeness defect {defect:e})");
        }
        Ok(Self { dim, kraus })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            kraus: alloc::vec![linalg::identity(dim)],
        }
    }

    pub fn unitary(u: &CMatrix) -> Result<Self> {
        Self::new(alloc::vec![u.clone()])
    }

    /// `ρ ↦ Σ_i w_i U_i ρ U_i†` for probability weights `w_i`.
    pub fn unitary_mixture(terms: &[(f64, CMatrix)]) -> Result<Self> {
        if terms.iter().any(|(w, _)| *w < 0.0) {
            bail!(InvalidChannel, "negative mixture weight");
        }
        Self::new(terms.iter().map(|(w, u)| u * c(w.sqrt(), 0.0)).collect())
    }

    /// Complete dephasing in the orthonormal basis given by the columns of `u`:
    /// Kraus operators `U|k⟩⟨k|U†`.
    pub fn dephasing(u: &CMatrix) -> Result<Self> {
        if !u.is_square() {
            bail!(Shape, "basis matrix must be square");
        }
        let defect = linalg::unitarity_defect(u);
        if defect > 1e-10 {
            bail!(InvalidChannel, "basis matrix is not unitary (defect {defect:e})");
        }
        let kraus = (0..u.ncols())
            .map(|k| {
                let v = u.column(k).into_owned();
                linalg::outer(&v, &v)
            })
            .collect();
        Self::new(kraus)
    }

    /// Pinching `ρ ↦ Σ_i P_i ρ P_i` for orthogonal projectors summing to `I`.
    pub fn pinching(projectors: Vec<CMatrix>) -> Result<Self> {
        Self::new(projectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim {
            bail!(Shape, "operand has dim {dim}, channel acts on dim {}", self.dim);
        }
        Ok(())
    }

    /// Action on an arbitrary operator.
    pub fn apply_matrix(&self, m: &CMatrix) -> Result<CMatrix> {
        if !m.is_square() {
            bail!(Shape, "operand must be square");
        }
        self.check_dim(m.nrows())?;
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            out += k * m * k.adjoint();
        }
        Ok(out)
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        self.apply_matrix(rho.matrix()).map(DensityOperator::from_hermitian_unchecked)
    }

    /// Heisenberg-picture action `A ↦ Σ_a E_a† A E_a`.
    pub fn adjoint_apply(&self, a: &CMatrix) -> Result<CMatrix> {
        if !a.is_square() {
            bail!(Shape, "operand must be square");
        }
        self.check_dim(a.nrows())?;
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            out += k.adjoint() * a * k;
        }
        Ok(out)
    }

    pub fn superoperator(&self) -> SuperoperatorMatrix {
        let n = self.dim * self.dim;
        let mut matrix = CMatrix::zeros(n, n);
        for k in &self.kraus {
            matrix += linalg::kron(&k.conjugate(), k);
        }
        SuperoperatorMatrix {
            dim: self.dim,
            matrix,
        }
    }

    pub fn unitality_defect(&self) -> f64 {
        let image = self
            .apply_matrix(&linalg::identity(self.dim))
            .expect("identity has the channel dimension");
        linalg::max_abs_diff(&image, &linalg::identity(self.dim))
    }

    pub fn is_unital(&self) -> bool {
        self.unitality_defect() <= UNITAL_TOL
    }

    pub fn idempotence_defect(&self) -> f64 {
        self.superoperator().idempotence_defect()
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotence_defect() <= IDEMPOTENT_TOL
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &KrausChannel) -> Result<KrausChannel> {
        self.check_dim(after.dim)?;
        let kraus = after
            .kraus
            .iter()
            .flat_map(|b| self.kraus.iter().map(move |a| b * a))
            .collect();
        Ok(Self {
            dim: self.dim,
            kraus,
        })
    }

    /// `E ⊗ F` on the product space.
    pub fn tensor(&self, other: &KrausChannel) -> KrausChannel {
        let kraus = self
            .kraus
            .iter()
            .flat_map(|a| other.kraus.iter().map(move |b| linalg::kron(a, b)))
            .collect();
        Self {
            dim: self.dim * other.dim,
            kraus,
        }
    }

    /// This channel on one factor of a bipartite space, identity on the other.
    pub fn lift(&self, other_dim: usize, side: Subsystem) -> KrausChannel {
        let id = Self::identity(other_dim);
        match side {
            Subsystem::A => self.tensor(&id),
            Subsystem::B => id.tensor(self),
        }
    }

    /// `ρ ↦ V E(V† ρ V) V†`.
    pub fn conjugated(&self, v: &CMatrix) -> Result<KrausChannel> {
        self.check_dim(v.nrows())?;
        Ok(Self {
            dim: self.dim,
            kraus: self.kraus.iter().map(|k| v * k * v.adjoint()).collect(),
        })
    }
}

/// Matrix of a channel on column-stacked operators: `vec(E(X)) = M vec(X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperoperatorMatrix {
    dim: usize,
    matrix: CMatrix,
}

impl SuperoperatorMatrix {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn apply_vectorized(&self, x: &CMatrix) -> Result<CMatrix> {
        if x.nrows() != self.dim || x.ncols() != self.dim {
            bail!(Shape, "operand must be {0}x{0}", self.dim);
        }
        let v = crate::linalg::CVector::from_column_slice(x.as_slice());
        let out = &self.matrix * v;
        Ok(CMatrix::from_column_slice(self.dim, self.dim, out.as_slice()))
    }

    pub fn idempotence_defect(&self) -> f64 {
        linalg::max_abs_diff(&(&self.matrix * &self.matrix), &self.matrix)
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.idempotence_defect() <= tol
    }
}
