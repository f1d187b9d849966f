//! Classification, safe complex arithmetic and machine constants.

mod classify;
mod complex;
mod params;
mod real;
mod scalar;

pub use classify::{classify, is_exceptional, is_exceptional_complex, is_inf, is_nan, FpClass};
pub use complex::{cmul_annexg, cmul_textbook, has_inf, has_nan, lapy2, safe_cabs, safe_cdiv};
pub use params::{machine_params, machine_params_for, AnyMachineParams, MachineParams, ParamsError};
pub use real::{Precision, Real};
pub use scalar::{nan_eq, Scalar};
