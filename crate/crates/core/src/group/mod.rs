//! Representations of the three group families: finite groups, U(1) through
//! charge gradings, and collective SU(2) on qubits.

mod charge;
mod combinatorics;
mod finite;
mod spin;

pub use charge::{ChargeGrading, ChargeSector};
pub use combinatorics::{binomial, multiplicity_dimension, symmetric_subspace_dimension};
pub use finite::{FiniteGroupRep, ValidationReport, Violation, MAX_GROUP_ORDER, REP_TOL};
pub use spin::{CollectiveSpinRep, SchurLabel, SpinSector, MAX_QUBITS};
