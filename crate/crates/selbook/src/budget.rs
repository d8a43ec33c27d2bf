//! Resource budgets for the enumeration and counting engines.
//!
//! Filling enumeration is exponential in the number of cells and the
//! down-set dynamic program can hold exponentially many memo entries, so
//! both are capped by default.  Callers that know what they are doing
//! (or that pass an explicit result limit) can raise or bypass the caps.

/// Caps on exhaustive work.  `Default` matches casual interactive use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest cell count accepted for full enumeration without a limit.
    pub max_enumeration_cells: usize,
    /// Largest number of memoised down-sets for linear-extension counting.
    pub max_dp_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_enumeration_cells: 14,
            max_dp_states: 10_000_000,
        }
    }
}

impl Budget {
    /// Budget with both caps set high enough for the test suites.
    pub fn generous() -> Self {
        Budget {
            max_enumeration_cells: 24,
            max_dp_states: 50_000_000,
        }
    }
}
