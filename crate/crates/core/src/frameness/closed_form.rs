//! Closed-form asymmetries for U(1) and for pure states under collective SU(2).

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, Result};
use crate::group::{multiplicity_dimension, ChargeGrading, CollectiveSpinRep};
use crate::linalg::{self, CMatrix};
use crate::operator::{shannon_entropy, von_neumann_entropy, DensityOperator, ProbabilityDistribution, PureState};

/// `H({p_n}) − S(ρ)` with `p_n = Tr(Π_n ρ)`; only valid when every charge
/// sector is one-dimensional.
pub fn u1_asymmetry_closed_form(grading: &ChargeGrading, rho: &DensityOperator) -> Result<f64> {
    if !grading.has_trivial_multiplicity() {
        bail!(
            ClosedFormInapplicable,
            "a charge sector has dimension > 1; use the general twirl"
        );
    }
    let weights: Vec<f64> = grading.sector_weights(rho)?.into_iter().map(|(_, p)| p).collect();
    let p = ProbabilityDistribution::new(weights)?;
    Ok(shannon_entropy(&p) - von_neumann_entropy(rho))
}

/// Pure-state SU(2) asymmetry from the sector weights `p_j` (indexed by `j`)
/// and, for each `j < j_max`, the Schmidt weights `q^{(j)}` across `M_j ⊗ N_j`:
///
/// `p_{j_max} log(2j_max+1) + Σ_{j<j_max} p_j [log(2j+1) + H(q^{(j)})] + H({p_j})`.
pub fn su2_pure_asymmetry_closed_form(
    p: &ProbabilityDistribution,
    q: &[ProbabilityDistribution],
    j_max: u32,
) -> Result<f64> {
    if p.len() != j_max as usize + 1 {
        bail!(InvalidDistribution, "need {} sector weights, got {}", j_max + 1, p.len());
    }
    if q.len() != j_max as usize {
        bail!(InvalidDistribution, "need {} Schmidt distributions, got {}", j_max, q.len());
    }
    let n_qubits = 2 * j_max;
    let pw = p.weights();
    let mut total = pw[j_max as usize] * ((2 * j_max + 1) as f64).log2();
    for (j, qj) in q.iter().enumerate() {
        let cap = (2 * j + 1).min(multiplicity_dimension(n_qubits, j as u32)? as usize);
        if qj.len() > cap {
            bail!(
                InvalidDistribution,
                "Schmidt distribution for j = {j} has {} entries, at most {cap} allowed",
                qj.len()
            );
        }
        total += pw[j] * (((2 * j + 1) as f64).log2() + shannon_entropy(qj));
    }
    Ok(total + shannon_entropy(p))
}

/// Sector weights and Schmidt weights of a pure state in the Schur basis,
/// in the shape [`su2_pure_asymmetry_closed_form`] expects.
pub fn su2_schmidt_data(
    rep: &CollectiveSpinRep,
    psi: &PureState,
) -> Result<(ProbabilityDistribution, Vec<ProbabilityDistribution>)> {
    if psi.dim() != rep.dim() {
        bail!(Shape, "state has dim {}, representation has dim {}", psi.dim(), rep.dim());
    }
    let coeffs = rep.basis().adjoint() * psi.amplitudes();
    let j_max = rep.j_max();
    let mut p = alloc::vec![0.0; j_max as usize + 1];
    let mut q = alloc::vec![ProbabilityDistribution::uniform(1)?; j_max as usize];
    for s in rep.sectors() {
        let j = s.j as i32;
        let block = CMatrix::from_fn(s.irrep_dim(), s.multiplicity, |row, alpha| {
            coeffs[s.column(j - row as i32, alpha)]
        });
        let weight = block.norm_squared();
        p[s.j as usize] = weight;
        if s.j < j_max && weight > 1e-14 {
            let keep = s.irrep_dim().min(s.multiplicity);
            let mut schmidt = linalg::eigvalsh(&(block.adjoint() * &block));
            schmidt.sort_by(|a, b| b.total_cmp(a));
            schmidt.truncate(keep);
            let raw = schmidt.into_iter().map(|x| x.max(0.0)).collect();
            q[s.j as usize] = ProbabilityDistribution::from_unnormalized(raw)?;
        }
    }
    Ok((ProbabilityDistribution::from_unnormalized(p)?, q))
}

/// `log₂[(4/3)j³ + (5/3)j + 1]`, the largest SU(2) asymmetry on `2j` qubits.
pub fn max_su2_asymmetry_value(j_max: u32) -> f64 {
    let j = j_max as u128;
    let support = (4 * j * j * j + 5 * j + 3) / 3;
    (support as f64).log2()
}

/// `log₂(n_max + 1)`, the largest U(1) asymmetry with charges `0..=n_max`.
pub fn max_u1_asymmetry_value(n_max: u64) -> f64 {
    ((n_max + 1) as f64).log2()
}
