//! LU solver stack with exception checking: recursive and blocked
//! factorization, triangular-solve application and the driver.
//!
//! Every routine takes Fortran-style scalars (`i32` sizes and leading
//! dimensions, 1-based pivots) so argument-error codes keep their usual
//! meaning. A slice shorter than its declared shape is reported as an
//! illegal value of that argument.

mod frame;
mod gesv;
mod getrf;
mod getrf2;
mod getrs;
mod workspace;

pub use gesv::{gesv, gesv_ec, gesv_ec_with};
pub use getrf::{getrf, getrf_ec, getrf_ec_with};
pub use getrf2::{getrf2, getrf2_ec};
pub use getrs::{getrs, getrs_ec};
pub use workspace::{round_up_to, workspace_fits, IntWidth};

/// Tuning and protocol options for the factorization routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LuOptions {
    /// Panel width of the blocked factorization; `≤ 1` or `≥ min(m, n)` selects the recursive code.
    pub nb: usize,
    /// Pass an already-scanned input's status down to internal calls so they skip the rescan.
    pub seed_prechecked: bool,
}

impl Default for LuOptions {
    fn default() -> Self {
        LuOptions { nb: 64, seed_prechecked: true }
    }
}

/// Report lengths: 6 header slots plus argument and call slots.
pub const GESV_INFO_LEN: usize = 10;
pub const GETRF_INFO_LEN: usize = 9;
pub const GETRF2_INFO_LEN: usize = 9;
pub const GETRS_INFO_LEN: usize = 8;
/// Enough for any routine in this module.
pub const MAX_INFO_LEN: usize = 10;

#[cfg(test)]
mod tests;
