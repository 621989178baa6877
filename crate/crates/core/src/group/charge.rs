use alloc::vec::Vec;

use crate::budget::DimensionBudget;
use crate::error::{bail, Result};
use crate::linalg::{self, c, CMatrix, C64};
use crate::operator::DensityOperator;

/// A U(1) action given by the number-operator eigenvalue of each basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeGrading {
    charges: Vec<u64>,
}

/// Basis indices sharing one charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeSector {
    pub charge: u64,
    pub indices: Vec<usize>,
}

impl ChargeGrading {
    pub fn new(charges: Vec<u64>) -> Result<Self> {
        if charges.is_empty() {
            bail!(Domain, "charge grading needs at least one basis vector");
        }
        Ok(Self { charges })
    }

    /// Accepts signed labels, rejecting negative ones.
    pub fn from_signed(charges: &[i64]) -> Result<Self> {
        if let Some(n) = charges.iter().find(|&&n| n < 0) {
            bail!(Domain, "negative charge label {n}");
        }
        Self::new(charges.iter().map(|&n| n as u64).collect())
    }

    /// Charges `0, 1, …, n_max` on an `(n_max + 1)`-dimensional space.
    pub fn ladder(n_max: u64) -> Self {
        Self {
            charges: (0..=n_max).collect(),
        }
    }

    /// Hamming weight of each computational basis string on `n` qubits.
    pub fn hamming_weight(n_qubits: u32, budget: &DimensionBudget) -> Result<Self> {
        let dim = budget.power("hamming grading", 2, n_qubits)?;
        Ok(Self {
            charges: (0..dim).map(|x| (x as u64).count_ones() as u64).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[u64] {
        &self.charges
    }

    pub fn max_charge(&self) -> u64 {
        self.charges.iter().copied().max().unwrap_or(0)
    }

    /// Sectors in increasing charge order.
    pub fn sectors(&self) -> Vec<ChargeSector> {
        let mut labels: Vec<u64> = self.charges.clone();
        labels.sort_unstable();
        labels.dedup();
        labels
            .into_iter()
            .map(|charge| ChargeSector {
                charge,
                indices: (0..self.dim()).filter(|&i| self.charges[i] == charge).collect(),
            })
            .collect()
    }

    /// True when every charge occurs once, so each sector is one-dimensional.
    pub fn has_trivial_multiplicity(&self) -> bool {
        self.sectors().iter().all(|s| s.indices.len() == 1)
    }

    /// Diagonal 0/1 projectors onto each sector, in increasing charge order.
    pub fn sector_projectors(&self) -> Vec<(u64, CMatrix)> {
        self.sectors()
            .into_iter()
            .map(|s| {
                let mut p = CMatrix::zeros(self.dim(), self.dim());
                for i in s.indices {
                    p[(i, i)] = c(1.0, 0.0);
                }
                (s.charge, p)
            })
            .collect()
    }

    pub fn number_operator(&self) -> CMatrix {
        let values: Vec<f64> = self.charges.iter().map(|&n| n as f64).collect();
        linalg::diag_real(&values)
    }

    /// `e^{iφN̂}`.
    pub fn phase_unitary(&self, phi: f64) -> CMatrix {
        let mut u = CMatrix::zeros(self.dim(), self.dim());
        for (i, &n) in self.charges.iter().enumerate() {
            u[(i, i)] = C64::from_polar(1.0, phi * n as f64);
        }
        u
    }

    /// `p_n = Tr(Π_n ρ)` for each sector, in increasing charge order.
    pub fn sector_weights(&self, rho: &DensityOperator) -> Result<Vec<(u64, f64)>> {
        self.check_dim(rho.dim())?;
        Ok(self
            .sectors()
            .into_iter()
            .map(|s| (s.charge, s.indices.iter().map(|&i| rho.matrix()[(i, i)].re).sum()))
            .collect())
    }

    /// Grading of `n` copies: charges add.
    pub fn tensor_power(&self, n: u32, budget: &DimensionBudget) -> Result<Self> {
        if n == 0 {
            bail!(Domain, "tensor power needs n >= 1");
        }
        budget.power("charge grading tensor power", self.dim(), n)?;
        let mut charges = self.charges.clone();
        for _ in 1..n {
            charges = charges
                .iter()
                .flat_map(|&a| self.charges.iter().map(move |&b| a + b))
                .collect();
        }
        Ok(Self { charges })
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim() {
            bail!(Shape, "state has dim {dim}, grading has dim {}", self.dim());
        }
        Ok(())
    }
}
