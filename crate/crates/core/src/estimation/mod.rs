//! Accessible information about a group element encoded in `T(g)ρT(g)†`.

mod ensemble;
mod povm;

pub use ensemble::{
    holevo_bound_check, mutual_information, orbit_ensemble, square_root_measurement, HolevoReport, OrbitEnsemble,
};
pub use povm::{DiscretePovm, EFFECT_PSD_TOL, POVM_COMPLETENESS_TOL};
