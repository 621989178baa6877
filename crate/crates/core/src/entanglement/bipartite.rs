use crate::error::{bail, Result};
use crate::linalg::{c, CVector};
use crate::operator::{partial_trace, DensityOperator, PureState, Subsystem};

/// A state on `H_A ⊗ H_B`, indices A-major.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    dims: (usize, usize),
    state: DensityOperator,
}

impl BipartiteState {
    pub fn new(d_a: usize, d_b: usize, state: DensityOperator) -> Result<Self> {
        if d_a == 0 || d_b == 0 || d_a * d_b != state.dim() {
            bail!(Shape, "dims {d_a} x {d_b} do not factor a state of dim {}", state.dim());
        }
        Ok(Self { dims: (d_a, d_b), state })
    }

    /// `(|00⟩ + s|11⟩)/√2` with `s = ±1`.
    pub fn bell_phi(plus: bool) -> PureState {
        let s = 1.0 / 2f64.sqrt();
        let sign = if plus { s } else { -s };
        PureState::new(CVector::from_vec(alloc::vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(sign, 0.0)]))
            .expect("normalized by construction")
    }

    /// `p|φ₊⟩⟨φ₊| + (1−p)|φ₋⟩⟨φ₋|`.
    pub fn bell_diagonal(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            bail!(Domain, "mixing weight must lie in [0, 1], got {p}");
        }
        let state = Self::bell_phi(true).projector().mix(&Self::bell_phi(false).projector(), p)?;
        Self::new(2, 2, state)
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn side_dim(&self, side: Subsystem) -> usize {
        match side {
            Subsystem::A => self.dims.0,
            Subsystem::B => self.dims.1,
        }
    }

    pub fn state(&self) -> &DensityOperator {
        &self.state
    }

    pub fn reduced(&self, keep: Subsystem) -> DensityOperator {
        partial_trace(&self.state, self.dims, keep).expect("dims factor the state")
    }
}
