use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::channel::{generate::block_decoherence, KrausChannel};
use crate::error::{bail, Result};
use crate::group::{ChargeGrading, CollectiveSpinRep, FiniteGroupRep};
use crate::linalg::{self, c, CMatrix};
use crate::operator::DensityOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Finite,
    U1,
    Su2,
}

/// The group average `ρ ↦ ∫ dg T(g) ρ T(g)†` for one of the supported families.
///
/// * finite: uniform average over all `|G|` conjugations;
/// * U(1): pinching across charge sectors, keeping intra-sector coherences;
/// * SU(2): in each `M_j ⊗ N_j` block, complete decoherence of `M_j` and
///   identity on `N_j`, evaluated exactly in the Schur basis.
#[derive(Debug, Clone, Copy)]
pub enum TwirlOperation<'a> {
    Finite(&'a FiniteGroupRep),
    U1(&'a ChargeGrading),
    Su2(&'a CollectiveSpinRep),
}

impl<'a> TwirlOperation<'a> {
    pub fn kind(&self) -> GroupKind {
        match self {
            TwirlOperation::Finite(_) => GroupKind::Finite,
            TwirlOperation::U1(_) => GroupKind::U1,
            TwirlOperation::Su2(_) => GroupKind::Su2,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            TwirlOperation::Finite(rep) => rep.dim(),
            TwirlOperation::U1(grading) => grading.dim(),
            TwirlOperation::Su2(rep) => rep.dim(),
        }
    }

    /// Twirl of an arbitrary operator (the map is linear).
    pub fn apply_matrix(&self, m: &CMatrix) -> Result<CMatrix> {
        if m.nrows() != self.dim() || m.ncols() != self.dim() {
            bail!(Shape, "operand is {}x{}, group acts on dim {}", m.nrows(), m.ncols(), self.dim());
        }
        Ok(match self {
            TwirlOperation::Finite(rep) => {
                let mut acc = CMatrix::zeros(m.nrows(), m.ncols());
                for u in rep.unitaries() {
                    acc += u * m * u.adjoint();
                }
                acc * c(1.0 / rep.order() as f64, 0.0)
            }
            TwirlOperation::U1(grading) => {
                let q = grading.charges();
                CMatrix::from_fn(m.nrows(), m.ncols(), |i, j| if q[i] == q[j] { m[(i, j)] } else { c(0.0, 0.0) })
            }
            TwirlOperation::Su2(rep) => {
                let schur = rep.to_schur(m);
                let mut out = CMatrix::zeros(m.nrows(), m.ncols());
                for s in rep.sectors() {
                    let j = s.j as i32;
                    let scale = c(1.0 / s.irrep_dim() as f64, 0.0);
                    for a in 0..s.multiplicity {
                        for b in 0..s.multiplicity {
                            // σ_j[α, α'] = Σ_m ⟨j,m,α|ρ|j,m,α'⟩
                            let mut reduced = c(0.0, 0.0);
                            for mm in -j..=j {
                                reduced += schur[(s.column(mm, a), s.column(mm, b))];
                            }
                            let value = reduced * scale;
                            for mm in -j..=j {
                                out[(s.column(mm, a), s.column(mm, b))] = value;
                            }
                        }
                    }
                }
                rep.from_schur(&out)
            }
        })
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        self.apply_matrix(rho.matrix()).map(DensityOperator::from_hermitian_unchecked)
    }

    /// Spectrum of a twirled operator, read off its block structure instead of
    /// diagonalizing the full matrix.
    pub fn twirled_spectrum(&self, twirled: &CMatrix) -> Result<Vec<f64>> {
        if twirled.nrows() != self.dim() || twirled.ncols() != self.dim() {
            bail!(Shape, "operand is {}x{}, group acts on dim {}", twirled.nrows(), twirled.ncols(), self.dim());
        }
        Ok(match self {
            TwirlOperation::Finite(_) => linalg::eigvalsh(twirled),
            TwirlOperation::U1(grading) => {
                let mut spectrum = Vec::with_capacity(self.dim());
                for sector in grading.sectors() {
                    let idx = &sector.indices;
                    let block = CMatrix::from_fn(idx.len(), idx.len(), |a, b| twirled[(idx[a], idx[b])]);
                    spectrum.extend(linalg::eigvalsh(&block));
                }
                spectrum
            }
            TwirlOperation::Su2(rep) => {
                let schur = rep.to_schur(twirled);
                let mut spectrum = Vec::with_capacity(self.dim());
                for s in rep.sectors() {
                    let j = s.j as i32;
                    let block = CMatrix::from_fn(s.multiplicity, s.multiplicity, |a, b| {
                        schur[(s.column(j, a), s.column(j, b))]
                    });
                    for lambda in linalg::eigvalsh(&block) {
                        spectrum.extend(core::iter::repeat_n(lambda, s.irrep_dim()));
                    }
                }
                spectrum
            }
        })
    }

    /// A Kraus form of the same map, for the generic channel checks.
    pub fn kraus_channel(&self) -> KrausChannel {
        match self {
            TwirlOperation::Finite(rep) => {
                let w = 1.0 / rep.order() as f64;
                let terms: Vec<(f64, CMatrix)> = rep.unitaries().iter().map(|u| (w, u.clone())).collect();
                KrausChannel::unitary_mixture(&terms).expect("uniform mixture of unitaries")
            }
            TwirlOperation::U1(grading) => {
                KrausChannel::pinching(grading.sector_projectors().into_iter().map(|(_, p)| p).collect())
                    .expect("sector projectors resolve the identity")
            }
            TwirlOperation::Su2(rep) => {
                let blocks: Vec<(usize, usize)> = rep
                    .sectors()
                    .iter()
                    .map(|s| (s.irrep_dim(), s.multiplicity))
                    .collect();
                block_decoherence(rep.basis(), &blocks)
            }
        }
    }

    /// Representation unitaries for covariance checks: every element for a
    /// finite group, random phases or rotations otherwise.
    pub fn sample_elements<R: Rng + ?Sized>(&self, rng: &mut R, count: usize) -> Vec<CMatrix> {
        match self {
            TwirlOperation::Finite(rep) => rep.unitaries().to_vec(),
            TwirlOperation::U1(grading) => (0..count)
                .map(|_| grading.phase_unitary(rng.random_range(0.0..2.0 * PI)))
                .collect(),
            TwirlOperation::Su2(rep) => (0..count)
                .map(|_| {
                    let theta = [
                        rng.random_range(-PI..PI),
                        rng.random_range(-PI..PI),
                        rng.random_range(-PI..PI),
                    ];
                    rep.rotation(theta)
                })
                .collect(),
        }
    }
}
