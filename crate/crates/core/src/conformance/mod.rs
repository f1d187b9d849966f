//! Generated conformance catalog for the level-1 kernels, fixed regression
//! examples, a suite runner, and argument-check fault injection for the
//! solver.

mod case;
mod catalog;
mod fixed;
mod injection;
mod runner;

pub use case::{CaseInput, Expected, Pat, Routine, TestCase};
pub use catalog::{
    gen_iamax_complex_cases, gen_iamax_real_cases, gen_nrm2_cases, gen_nrm2_complex_cases, subnormals_supported,
};
pub use fixed::{gen_regression_cases, gen_rotg_cases};
pub use injection::{
    clean_system, enumerate_sites, run_injection, InjectionOutcome, InjectionPlan, PoisonContext, Position, SiteInfo,
};
pub use runner::{run_suite, run_suite_with, Cell, Failure, Kernels, LegacyIamax, Library, Record, Status, SuiteResult};

use crate::numeric::{Real, Scalar};

/// Sizes the default suite runs.
pub const DEFAULT_SIZES: [usize; 5] = [1, 2, 3, 10, 128];

/// Routine families selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Iamax,
    Nrm2,
    Rotg,
    Regression,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Iamax, Family::Nrm2, Family::Rotg, Family::Regression];

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "iamax" => Some(Family::Iamax),
            "nrm2" => Some(Family::Nrm2),
            "rotg" => Some(Family::Rotg),
            "regression" | "trsv" | "ger" | "gesv" => Some(Family::Regression),
            _ => None,
        }
    }
}

/// All cases of the selected families for the given sizes, in one precision.
/// Size-independent families appear once.
pub fn catalog<T: Real>(families: &[Family], sizes: &[usize]) -> Vec<TestCase<T>> {
    let mut out = Vec::new();
    for f in families {
        match f {
            Family::Iamax => {
                for &n in sizes.iter().filter(|&&n| n >= 1) {
                    out.extend(gen_iamax_real_cases::<T>(n));
                    out.extend(gen_iamax_complex_cases::<T>(n));
                }
            }
            Family::Nrm2 => {
                for &n in sizes.iter().filter(|&&n| n >= 1) {
                    out.extend(gen_nrm2_cases::<T>(n));
                    out.extend(gen_nrm2_complex_cases::<T>(n));
                }
            }
            Family::Rotg => out.extend(gen_rotg_cases::<T>()),
            Family::Regression => out.extend(gen_regression_cases::<T>()),
        }
    }
    out
}

/// Generate and run the selected families in both precisions.
pub fn run_default<T: Real + Scalar>(families: &[Family], sizes: &[usize], tolerance_ulps: u64) -> SuiteResult {
    run_suite(&catalog::<T>(families, sizes), tolerance_ulps)
}

/// Both precisions, merged.
pub fn run_both(families: &[Family], sizes: &[usize], tolerance_ulps: u64) -> SuiteResult {
    let mut r = run_default::<f64>(families, sizes, tolerance_ulps);
    r.merge(run_default::<f32>(families, sizes, tolerance_ulps));
    r
}

#[cfg(test)]
mod tests;
