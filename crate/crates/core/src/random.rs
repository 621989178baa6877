//! Seeded sampling of unitaries, states and Hermitian matrices.
//!
//! Streams are ChaCha8 generators keyed by a master seed and a stream index,
//! so per-sample generators do not depend on evaluation order.

use alloc::vec::Vec;

use nalgebra::QR;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::linalg::{c, CMatrix, CVector, C64};
use crate::operator::{DensityOperator, PureState};

pub type SampleRng = ChaCha8Rng;

/// Generator for stream `index` under `master_seed`.
pub fn stream(master_seed: u64, index: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    c(re, im)
}

pub fn ginibre<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Haar-random unitary: QR of a Ginibre matrix with the phases of `R`'s
/// diagonal folded back into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let qr = QR::new(ginibre(rng, dim, dim));
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Uniform point on the probability simplex with `n` vertices.
pub fn simplex_point<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Random full-rank state: simplex spectrum conjugated by a Haar unitary.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityOperator {
    random_density_with_rank(rng, dim, dim)
}

/// Random state with the given rank.
pub fn random_density_with_rank<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    rank: usize,
) -> DensityOperator {
    let rank = rank.clamp(1, dim);
    let mut spectrum = simplex_point(rng, rank);
    spectrum.resize(dim, 0.0);
    let u = haar_unitary(rng, dim);
    let d = crate::linalg::diag_real(&spectrum);
    DensityOperator::from_hermitian_unchecked(&u * d * u.adjoint())
}

pub fn random_pure<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> PureState {
    let v = CVector::from_fn(dim, |_, _| gaussian(rng));
    PureState::normalized(v).expect("gaussian vector is nonzero with probability one")
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let g = ginibre(rng, dim, dim);
    (&g + g.adjoint()) * c(0.5, 0.0)
}
