//! Many-copy behavior of the U(1) asymmetry and related bounds.

mod bounds;
mod convolution;
mod scaling;
mod witness;

pub use bounds::{
    finite_group_bound_check, lie_group_log_bound, su2_lie_bound_check, FiniteGroupBoundReport, LieGroupBound,
    Su2BoundCheck, BOUND_SLACK,
};
pub use convolution::{
    convolve_copies, gaussian_entropy_model, number_variance, u1_ncopy_asymmetry, ModelConstant,
    NumberDistributionProfile,
};
pub use scaling::{
    regularized_asymmetry_table, relinearized_monotone, RelinearizationReport, RelinearizedRow, ScalingReport,
    ScalingRow,
};
pub use witness::{
    variance_discontinuity_witness, witness_states, WitnessReport, WitnessRow, DEFAULT_CHARGE_MULTIPLIER,
};
