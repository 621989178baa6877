use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::linalg::{self, CMatrix, ZERO};

use super::state::{DensityOperator, PureState};

/// Which tensor factor of a bipartite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

/// Trace out one factor of an `A ⊗ B` matrix (A-major ordering).
pub fn partial_trace_matrix(m: &CMatrix, dims: (usize, usize), keep: Subsystem) -> Result<CMatrix> {
    let (da, db) = dims;
    if da == 0 || db == 0 || da * db != m.nrows() || !m.is_square() {
        bail!(Shape, "dims {da}x{db} do not factor a {}x{} matrix", m.nrows(), m.ncols());
    }
    Ok(match keep {
        Subsystem::A => CMatrix::from_fn(da, da, |i, j| {
            (0..db).fold(ZERO, |acc, k| acc + m[(i * db + k, j * db + k)])
        }),
        Subsystem::B => CMatrix::from_fn(db, db, |i, j| {
            (0..da).fold(ZERO, |acc, k| acc + m[(k * db + i, k * db + j)])
        }),
    })
}

pub fn partial_trace(rho: &DensityOperator, dims: (usize, usize), keep: Subsystem) -> Result<DensityOperator> {
    partial_trace_matrix(rho.matrix(), dims, keep).map(DensityOperator::from_hermitian_unchecked)
}

/// `‖a − b‖₁`, the sum of absolute eigenvalues of the difference.
pub fn trace_distance(a: &DensityOperator, b: &DensityOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        bail!(Shape, "trace distance between dims {} and {}", a.dim(), b.dim());
    }
    let diff = a.matrix() - b.matrix();
    Ok(linalg::eigvalsh(&diff).iter().map(|x| x.abs()).sum())
}

/// `ψ^{⊗n}`, refusing when the total dimension exceeds the budget.
pub fn tensor_power(psi: &PureState, n: u32, budget: &DimensionBudget) -> Result<PureState> {
    if n == 0 {
        bail!(Domain, "tensor power needs n >= 1");
    }
    budget.power("tensor power", psi.dim(), n)?;
    let mut out = psi.clone();
    for _ in 1..n {
        out = out.tensor(psi);
    }
    Ok(out)
}

/// `ρ^{⊗n}` under the same budget rule.
pub fn density_tensor_power(rho: &DensityOperator, n: u32, budget: &DimensionBudget) -> Result<DensityOperator> {
    if n == 0 {
        bail!(Domain, "tensor power needs n >= 1");
    }
    budget.power("tensor power", rho.dim(), n)?;
    let mut out = rho.clone();
    for _ in 1..n {
        out = out.tensor(rho);
    }
    Ok(out)
}
