//! Dephasing upper bounds on the relative entropy of entanglement.

mod bipartite;
mod bound;

pub use bipartite::BipartiteState;
pub use bound::{
    canonical_angles, dephasing_channel, dephasing_upper_bound, hashing_lower_bound, optimize_two_qubit_bound,
    random_basis_bound, two_qubit_dephasing_channel, two_qubit_parameterized_unitary, BoundArgmin, BoundReport,
    TwoQubitOptimizer, TIGHT_TOL,
};
