//! Random unital idempotent channels for property tests.
//!
//! Every unital idempotent channel decoheres some factors of a block
//! decomposition `⊕_q M_q ⊗ N_q` (in some basis), so the generators below
//! cover pinchings, finite-group twirls, and the general block form.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::linalg::{self, c, CMatrix, C64};
use crate::random;

use super::KrausChannel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelFamily {
    /// Dephasing across a random block partition in a random basis.
    BlockPinching,
    /// Twirl over a cyclic group `Z_k`, `k ≤ 8`, in a random basis.
    CyclicTwirl,
    /// Twirl over the quaternion group on a qubit factor, identity elsewhere.
    QuaternionTwirl,
    /// Conditional expectation onto the commutant of `⊕_q B(M_q) ⊗ I`.
    CommutantExpectation,
}

#[derive(Debug, Clone)]
pub struct GeneratedChannel {
    pub family: ChannelFamily,
    pub channel: KrausChannel,
}

/// Clock-and-shift operators `X^a Z^b` on `ℂ^m`; averaging over all of them
/// replaces any operator by its normalized trace times `I`.
fn weyl_operators(m: usize) -> Vec<CMatrix> {
    let omega = |k: usize| C64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
    let mut out = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let mut w = CMatrix::zeros(m, m);
            for col in 0..m {
                w[((col + a) % m, col)] = omega((b * col) % m);
            }
            out.push(w);
        }
    }
    out
}

/// `⊕_q D_{M_q} ⊗ id_{N_q}` on consecutive blocks `(m_q, n_q)`, then rotated
/// into the basis given by the columns of `basis`.
pub fn block_decoherence(basis: &CMatrix, blocks: &[(usize, usize)]) -> KrausChannel {
    let dim: usize = blocks.iter().map(|(m, n)| m * n).sum();
    assert_eq!(dim, basis.nrows(), "blocks must tile the space");
    let mut kraus = Vec::new();
    let mut offset = 0;
    for &(m, n) in blocks {
        let scale = c(1.0 / m as f64, 0.0);
        for w in weyl_operators(m) {
            let local = linalg::kron(&w, &linalg::identity(n)) * scale;
            let mut k = CMatrix::zeros(dim, dim);
            k.view_mut((offset, offset), (m * n, m * n)).copy_from(&local);
            kraus.push(basis * k * basis.adjoint());
        }
        offset += m * n;
    }
    KrausChannel::new(kraus).expect("block decoherence is trace preserving")
}

fn random_partition<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = dim;
    while left > 0 {
        let size = rng.random_range(1..=left);
        parts.push(size);
        left -= size;
    }
    parts
}

pub fn random_block_pinching<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> KrausChannel {
    let basis = random::haar_unitary(rng, dim);
    let mut projectors = Vec::new();
    let mut offset = 0;
    for size in random_partition(rng, dim) {
        let mut p = CMatrix::zeros(dim, dim);
        for i in offset..offset + size {
            p[(i, i)] = c(1.0, 0.0);
        }
        projectors.push(&basis * p * basis.adjoint());
        offset += size;
    }
    KrausChannel::pinching(projectors).expect("projectors resolve the identity")
}

pub fn random_cyclic_twirl<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> KrausChannel {
    let order = rng.random_range(2..=8usize);
    let charges: Vec<usize> = (0..dim).map(|_| rng.random_range(0..order)).collect();
    let basis = random::haar_unitary(rng, dim);
    let terms: Vec<(f64, CMatrix)> = (0..order)
        .map(|k| {
            let mut d = CMatrix::zeros(dim, dim);
            for (i, &q) in charges.iter().enumerate() {
                d[(i, i)] = C64::from_polar(1.0, 2.0 * PI * (k * q) as f64 / order as f64);
            }
            (1.0 / order as f64, &basis * d * basis.adjoint())
        })
        .collect();
    KrausChannel::unitary_mixture(&terms).expect("uniform mixture of unitaries")
}

/// Needs an even dimension.
pub fn random_quaternion_twirl<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> KrausChannel {
    assert!(dim.is_multiple_of(2), "quaternion twirl needs an even dimension");
    let group = crate::group::FiniteGroupRep::quaternion();
    let basis = random::haar_unitary(rng, dim);
    let rest = linalg::identity(dim / 2);
    let terms: Vec<(f64, CMatrix)> = group
        .unitaries()
        .iter()
        .map(|u| (1.0 / 8.0, &basis * linalg::kron(u, &rest) * basis.adjoint()))
        .collect();
    KrausChannel::unitary_mixture(&terms).expect("uniform mixture of unitaries")
}

pub fn random_commutant_expectation<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> KrausChannel {
    let mut blocks = Vec::new();
    for size in random_partition(rng, dim) {
        let divisors: Vec<usize> = (1..=size).filter(|d| size % d == 0).collect();
        let m = divisors[rng.random_range(0..divisors.len())];
        blocks.push((m, size / m));
    }
    let basis = random::haar_unitary(rng, dim);
    block_decoherence(&basis, &blocks)
}

/// One channel from a family chosen uniformly (quaternion only in even dims).
pub fn random_unital_idempotent<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> GeneratedChannel {
    let families: &[ChannelFamily] = if dim.is_multiple_of(2) {
        &[
            ChannelFamily::BlockPinching,
            ChannelFamily::CyclicTwirl,
            ChannelFamily::QuaternionTwirl,
            ChannelFamily::CommutantExpectation,
        ]
    } else {
        &[
            ChannelFamily::BlockPinching,
            ChannelFamily::CyclicTwirl,
            ChannelFamily::CommutantExpectation,
        ]
    };
    let family = families[rng.random_range(0..families.len())];
    let channel = match family {
        ChannelFamily::BlockPinching => random_block_pinching(rng, dim),
        ChannelFamily::CyclicTwirl => random_cyclic_twirl(rng, dim),
        ChannelFamily::QuaternionTwirl => random_quaternion_twirl(rng, dim),
        ChannelFamily::CommutantExpectation => random_commutant_expectation(rng, dim),
    };
    GeneratedChannel { family, channel }
}
