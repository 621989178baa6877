//! Channel machinery: Kraus and superoperator forms, unitality and
//! idempotence tests, fixed points, and the entropy-gap distance to the
//! image of a unital idempotent channel.

mod checks;
pub mod generate;
mod kraus;

pub use checks::{
    commutant_fixed_point_check, image_fix_equivalence_check, minimization_check, theorem1_distance, ImageFixReport,
    MinimizationCheck,
    FIXED_POINT_TOL,
};
pub use kraus::{KrausChannel, SuperoperatorMatrix, COMPLETENESS_TOL, IDEMPOTENT_TOL, UNITAL_TOL};
