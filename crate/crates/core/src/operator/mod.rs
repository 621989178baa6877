//! State objects and the entropic functionals every other module consumes.

mod entropy;
mod ops;
mod state;

pub use entropy::{
    binary_entropy, entropy_of_spectrum, relative_entropy, shannon_entropy, shannon_entropy_of,
    von_neumann_entropy, EIGEN_CUTOFF, SUPPORT_LEAK_TOL,
};
pub use ops::{density_tensor_power, partial_trace, partial_trace_matrix, tensor_power, trace_distance, Subsystem};
pub use state::{DensityOperator, ProbabilityDistribution, PureState, DISTRIBUTION_TOL, NORM_TOL, STATE_TOL};
