use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::channel::KrausChannel;
use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix, C64};
use crate::operator::{von_neumann_entropy, Subsystem};
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::random;

use super::BipartiteState;

/// Largest `|upper − lower|` for which a report is flagged tight.
pub const TIGHT_TOL: f64 = 1e-4;

/// Bound values closer than this are treated as equal when picking an argmin.
const TIE_TOL: f64 = 1e-12;

/// Complete dephasing along the columns of `u`.
pub fn dephasing_channel(u: &CMatrix) -> Result<KrausChannel> {
    KrausChannel::dephasing(u)
}

/// `S((I⊗D_U)(ρ)) − S(ρ)`, or with the dephasing on A when `side` is A.
pub fn dephasing_upper_bound(rho: &BipartiteState, u: &CMatrix, side: Subsystem) -> Result<f64> {
    let d = rho.side_dim(side);
    if u.nrows() != d || u.ncols() != d {
        bail!(Shape, "basis is {}x{}, dephased factor has dim {d}", u.nrows(), u.ncols());
    }
    let other = rho.state().dim() / d;
    let lifted = dephasing_channel(u)?.lift(other, side);
    let out = lifted.apply(rho.state())?;
    Ok(von_neumann_entropy(&out) - von_neumann_entropy(rho.state()))
}

/// `cosθ·diag(1, −1) + sinθ·[[0, e^{iγ}], [e^{−iγ}, 0]]`.
pub fn two_qubit_parameterized_unitary(theta: f64, gamma: f64) -> CMatrix {
    let (s, co) = theta.sin_cos();
    CMatrix::from_row_slice(
        2,
        2,
        &[
            c(co, 0.0),
            C64::from_polar(s, gamma),
            C64::from_polar(s, -gamma),
            c(-co, 0.0),
        ],
    )
}

/// `ρ ↦ ½ρ + ½(I⊗U)ρ(I⊗U)†` with `U = U_{θ,γ}` on the chosen qubit.
pub fn two_qubit_dephasing_channel(theta: f64, gamma: f64, side: Subsystem) -> KrausChannel {
    let u = two_qubit_parameterized_unitary(theta, gamma);
    KrausChannel::unitary_mixture(&[(0.5, linalg::identity(2)), (0.5, u)])
        .expect("U is unitary")
        .lift(2, side)
}

fn lifted_unitary(u: &CMatrix, side: Subsystem) -> CMatrix {
    let id = linalg::identity(2);
    match side {
        Subsystem::A => linalg::kron(u, &id),
        Subsystem::B => linalg::kron(&id, u),
    }
}

/// Entropy of `½ρ + ½VρV†` without building the channel.
fn two_qubit_output_entropy(rho: &CMatrix, theta: f64, gamma: f64, side: Subsystem) -> f64 {
    let v = lifted_unitary(&two_qubit_parameterized_unitary(theta, gamma), side);
    let out = (rho + &v * rho * v.adjoint()) * c(0.5, 0.0);
    crate::operator::entropy_of_spectrum(&linalg::eigvalsh(&out))
}

/// `max(0, S(ρ_A) − S(ρ_AB))`.
pub fn hashing_lower_bound(rho: &BipartiteState) -> f64 {
    let s_a = von_neumann_entropy(&rho.reduced(Subsystem::A));
    (s_a - von_neumann_entropy(rho.state())).max(0.0)
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundArgmin {
    Angles { theta: f64, gamma: f64 },
    Basis(CMatrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub upper: f64,
    pub lower: f64,
    pub argmin: BoundArgmin,
    pub tight: bool,
    pub side: Subsystem,
}

impl BoundReport {
    fn new(upper: f64, lower: f64, argmin: BoundArgmin, side: Subsystem) -> Self {
        Self { upper, lower, argmin, tight: (upper - lower).abs() <= TIGHT_TOL, side }
    }

    pub fn theta(&self) -> Option<f64> {
        match self.argmin {
            BoundArgmin::Angles { theta, .. } => Some(theta),
            BoundArgmin::Basis(_) => None,
        }
    }

    pub fn gamma(&self) -> Option<f64> {
        match self.argmin {
            BoundArgmin::Angles { gamma, .. } => Some(gamma),
            BoundArgmin::Basis(_) => None,
        }
    }
}

/// Maps `(θ, γ)` to the representative with `θ ∈ [0, π/2]`, `γ ∈ [0, 2π)`.
///
/// `U_{θ+π,γ} = −U_{θ,γ}` and `U_{π−θ,γ} = −U_{θ,γ+π}`, and `±U` give the same
/// channel. `γ` is set to 0 where `sin θ = 0`, and reduced mod π where
/// `cos θ = 0`.
pub fn canonical_angles(theta: f64, gamma: f64) -> (f64, f64) {
    let mut t = theta.rem_euclid(PI);
    let mut g = gamma;
    if t > PI / 2.0 {
        t = PI - t;
        g += PI;
    }
    g = g.rem_euclid(2.0 * PI);
    if t.sin().abs() < 1e-12 {
        return (0.0, 0.0);
    }
    if t.cos().abs() < 1e-12 {
        g = g.rem_euclid(PI);
    }
    (t, g)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitOptimizer {
    /// Points per axis; θ steps by π/grid over [0, π), γ by 2π/grid over [0, 2π).
    pub grid: usize,
    /// How many of the best grid points seed a local refinement.
    pub refine: usize,
    pub local: NelderMeadOptions,
}

impl Default for TwoQubitOptimizer {
    fn default() -> Self {
        Self {
            grid: 64,
            refine: 3,
            local: NelderMeadOptions { initial_step: PI / 128.0, f_tol: 1e-14, x_tol: 1e-9, max_evals: 1000 },
        }
    }
}

impl TwoQubitOptimizer {
    pub fn grid_point(&self, index: usize) -> (f64, f64) {
        let (i, k) = (index / self.grid, index % self.grid);
        (PI * i as f64 / self.grid as f64, 2.0 * PI * k as f64 / self.grid as f64)
    }

    /// Upper bound values over the whole grid, row-major in θ.
    pub fn grid_values(&self, rho: &BipartiteState, side: Subsystem) -> Result<Vec<f64>> {
        check_two_qubit(rho)?;
        let s_in = von_neumann_entropy(rho.state());
        Ok((0..self.grid * self.grid)
            .map(|idx| {
                let (t, g) = self.grid_point(idx);
                two_qubit_output_entropy(rho.state().matrix(), t, g, side) - s_in
            })
            .collect())
    }

    /// Minimizes the bound given precomputed grid values; grid evaluation can
    /// therefore happen elsewhere (e.g. in parallel) without changing results.
    pub fn finish(&self, rho: &BipartiteState, side: Subsystem, grid_values: &[f64]) -> Result<BoundReport> {
        check_two_qubit(rho)?;
        if self.grid == 0 || grid_values.len() != self.grid * self.grid {
            bail!(Shape, "expected {} grid values, got {}", self.grid * self.grid, grid_values.len());
        }
        let s_in = von_neumann_entropy(rho.state());
        let mut order: Vec<usize> = (0..grid_values.len()).collect();
        order.sort_by(|&a, &b| grid_values[a].total_cmp(&grid_values[b]).then(a.cmp(&b)));
        // Values within TIE_TOL of the minimum are ties; the lowest index wins.
        let floor = grid_values[order[0]];
        let lowest_tied = (0..grid_values.len())
            .find(|&i| grid_values[i] <= floor + TIE_TOL)
            .unwrap_or(order[0]);
        order.retain(|&i| i != lowest_tied);
        order.insert(0, lowest_tied);

        let best_idx = order[0];
        let (mut theta, mut gamma) = self.grid_point(best_idx);
        let mut best = grid_values[best_idx];
        for &idx in order.iter().take(self.refine) {
            let start = self.grid_point(idx);
            let m = nelder_mead(
                |x| two_qubit_output_entropy(rho.state().matrix(), x[0], x[1], side) - s_in,
                &[start.0, start.1],
                &self.local,
            );
            // Keep the earlier point unless the refinement is a genuine improvement.
            if m.value < best - TIE_TOL {
                best = m.value;
                theta = m.x[0];
                gamma = m.x[1];
            }
        }
        let (theta, gamma) = canonical_angles(theta, gamma);
        Ok(BoundReport::new(best, hashing_lower_bound(rho), BoundArgmin::Angles { theta, gamma }, side))
    }

    pub fn run(&self, rho: &BipartiteState, side: Subsystem) -> Result<BoundReport> {
        let values = self.grid_values(rho, side)?;
        self.finish(rho, side, &values)
    }
}

fn check_two_qubit(rho: &BipartiteState) -> Result<()> {
    if rho.dims() != (2, 2) {
        bail!(Shape, "two-qubit optimizer needs dims 2 x 2, got {:?}", rho.dims());
    }
    Ok(())
}

/// Grid plus local refinement over `(θ, γ)` with the default settings.
pub fn optimize_two_qubit_bound(rho: &BipartiteState, side: Subsystem) -> Result<BoundReport> {
    TwoQubitOptimizer::default().run(rho, side)
}

/// Best dephasing bound over the computational basis and `samples` Haar
/// random bases, for factors of any dimension.
pub fn random_basis_bound(rho: &BipartiteState, side: Subsystem, samples: usize, seed: u64) -> Result<BoundReport> {
    let d = rho.side_dim(side);
    let mut basis = linalg::identity(d);
    let mut best = dephasing_upper_bound(rho, &basis, side)?;
    for i in 0..samples {
        let mut rng = random::stream(seed, i as u64);
        let u = random::haar_unitary(&mut rng, d);
        let value = dephasing_upper_bound(rho, &u, side)?;
        if value < best {
            best = value;
            basis = u;
        }
    }
    Ok(BoundReport::new(best, hashing_lower_bound(rho), BoundArgmin::Basis(basis), side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{binary_entropy, DensityOperator};

    #[test]
    fn parameterized_unitary_examples() {
        let z = two_qubit_parameterized_unitary(0.0, 0.7);
        assert!(linalg::max_abs_diff(&z, &linalg::pauli_z()) < 1e-15);
        let x = two_qubit_parameterized_unitary(PI / 2.0, 0.0);
        assert!(linalg::max_abs_diff(&x, &linalg::pauli_x()) < 1e-15);
        let u = two_qubit_parameterized_unitary(0.3, 1.1);
        assert!(linalg::max_abs_diff(&(&u * &u), &linalg::identity(2)) < 1e-15);
        assert!(linalg::unitarity_defect(&u) < 1e-15);
    }

    #[test]
    fn dephasing_bound_examples() {
        let sep = BipartiteState::new(2, 2, DensityOperator::diagonal(&[0.1, 0.2, 0.3, 0.4]).unwrap()).unwrap();
        let id = linalg::identity(2);
        assert!(dephasing_upper_bound(&sep, &id, Subsystem::B).unwrap().abs() < 1e-12);
        let bell = BipartiteState::bell_diagonal(1.0).unwrap();
        assert!((dephasing_upper_bound(&bell, &id, Subsystem::B).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixture_form_equals_eigenbasis_dephasing() {
        let rho = BipartiteState::bell_diagonal(0.8).unwrap();
        for &(t, g) in &[(0.0, 0.0), (0.4, 1.3), (PI / 2.0, 0.0), (1.1, 4.0)] {
            let u = two_qubit_parameterized_unitary(t, g);
            let eig = linalg::eigh(&u);
            let direct = dephasing_upper_bound(&rho, &eig.vectors, Subsystem::B).unwrap();
            let mixture = two_qubit_dephasing_channel(t, g, Subsystem::B).apply(rho.state()).unwrap();
            let via_mixture = von_neumann_entropy(&mixture) - von_neumann_entropy(rho.state());
            assert!((direct - via_mixture).abs() < 1e-10);
        }
    }

    #[test]
    fn example_family_is_tight() {
        for &p in &[0.5, 0.6, 0.75, 0.9, 1.0] {
            let rho = BipartiteState::bell_diagonal(p).unwrap();
            let report = optimize_two_qubit_bound(&rho, Subsystem::B).unwrap();
            let expected = 1.0 - binary_entropy(p).unwrap();
            assert!((report.upper - expected).abs() < 1e-4, "p = {p}: {report:?}");
            assert!((report.lower - expected).abs() < 1e-9);
            assert!(report.tight);
            // At p = 1 every basis gives the same value and the first grid point wins.
            assert_eq!(report.theta(), Some(0.0), "p = {p}: {report:?}");
        }
    }

    #[test]
    fn hashing_examples() {
        let product = BipartiteState::new(2, 2, DensityOperator::diagonal(&[1.0, 0.0, 0.0, 0.0]).unwrap()).unwrap();
        assert_eq!(hashing_lower_bound(&product), 0.0);
        let mixed = BipartiteState::new(2, 2, DensityOperator::maximally_mixed(4)).unwrap();
        assert_eq!(hashing_lower_bound(&mixed), 0.0);
    }

    #[test]
    fn canonical_window() {
        let (t, g) = canonical_angles(PI + 0.3, 1.0);
        assert!((t - 0.3).abs() < 1e-12 && (g - 1.0).abs() < 1e-12);
        let (t, g) = canonical_angles(PI - 0.3, 1.0);
        assert!((t - 0.3).abs() < 1e-12 && (g - 1.0 - PI).abs() < 1e-12);
        assert_eq!(canonical_angles(PI, 2.0), (0.0, 0.0));
    }

    #[test]
    fn wrong_dims_rejected() {
        let rho = BipartiteState::new(2, 3, DensityOperator::maximally_mixed(6)).unwrap();
        assert!(optimize_two_qubit_bound(&rho, Subsystem::B).is_err());
        let report = random_basis_bound(&rho, Subsystem::B, 8, 1).unwrap();
        assert!(report.upper >= -1e-9);
    }
}
