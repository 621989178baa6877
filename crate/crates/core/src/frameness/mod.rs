//! Twirls, G-asymmetry and its closed forms, and maximal-asymmetry states.

mod asymmetry;
mod closed_form;
mod extremal;
mod twirl;

pub use asymmetry::{g_asymmetry, invariant_state_oracle, relative_entropy_of_frameness, AsymmetryResult, INVARIANCE_TOL};
pub use closed_form::{
    max_su2_asymmetry_value, max_u1_asymmetry_value, su2_pure_asymmetry_closed_form, su2_schmidt_data,
    u1_asymmetry_closed_form,
};
pub use extremal::{
    maximal_asymmetry_state, maximal_su2_state, maximal_u1_state, su2_maximal_support, su2_pairing_sizes,
    ExtremalFamily,
};
pub use twirl::{GroupKind, TwirlOperation};
