use crate::{Error, Result};

/// Caps on exhaustive enumeration. Exceeding one is an error, never a
/// silently truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for searches over all vertex subsets
    /// (`gamma_p`, `gamma_p_bar`, power domination polynomial).
    pub vertices: usize,
    /// Largest number of distinct support vertices when expanding an
    /// expected value or probability polynomial.
    pub support: usize,
    /// Largest number of placements a spectrum may enumerate.
    pub placements: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertices: 20,
            support: 25,
            placements: 1_000_000,
        }
    }
}

impl Limits {
    /// Limits with every cap set to the same vertex count.
    pub fn with_cap(cap: usize) -> Self {
        Limits {
            vertices: cap,
            support: cap,
            ..Limits::default()
        }
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.vertices {
            return Err(Error::CapExceeded {
                what: "vertex count",
                needed: n as u128,
                cap: self.vertices as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_support(&self, d: usize) -> Result<()> {
        if d > self.support {
            return Err(Error::CapExceeded {
                what: "distinct support size",
                needed: d as u128,
                cap: self.support as u128,
            });
        }
        Ok(())
    }
}
