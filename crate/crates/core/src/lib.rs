//! Numerical core for reference-frame resource measures.
//!
//! Group twirling, G-asymmetry and its minimization form, unital idempotent
//! channels, N-copy scaling of the U(1) asymmetry, accessible-information
//! bounds for group-orbit ensembles, and a dephasing upper bound on the
//! relative entropy of entanglement.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel sweeps live in the `frameness` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod budget;
pub mod channel;
pub mod entanglement;
pub mod error;
pub mod estimation;
pub mod frameness;
pub mod group;
pub mod linalg;
pub mod operator;
pub mod optimize;
pub mod random;

pub use budget::DimensionBudget;
pub use error::{Error, Result};
