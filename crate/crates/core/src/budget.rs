use crate::error::{Error, Result};

/// Default cap on the dimension of any explicitly materialized vector space.
pub const DEFAULT_MAX_DIM: usize = 1 << 14;

/// Upper bound on the dimensions the toolkit is willing to materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionBudget {
    pub max_dim: usize,
}

impl Default for DimensionBudget {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl DimensionBudget {
    pub fn new(max_dim: usize) -> Self {
        Self { max_dim }
    }

    pub fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_dim as u128 {
            Err(Error::ResourceLimit {
                what,
                needed,
                cap: self.max_dim,
            })
        } else {
            Ok(())
        }
    }

    /// `base^exp`, or a resource-limit error when it exceeds the cap.
    pub fn power(&self, what: &'static str, base: usize, exp: u32) -> Result<usize> {
        let needed = (base as u128).checked_pow(exp).unwrap_or(u128::MAX);
        self.check(what, needed)?;
        Ok(needed as usize)
    }
}
