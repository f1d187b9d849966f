//! Dense linear algebra kernels with consistent Inf/NaN propagation.
//!
//! The level-1/2/3 kernels never skip work because an operand entry is zero,
//! so `0·NaN` and `0·Inf` reach the output; only the documented
//! `alpha = 0` / `beta = 0` shortcuts leave operands unread. The LU solver
//! stack (`lapack`) optionally scans its arguments and internal calls for
//! Inf/NaN and reports what it found through INFO, a report array and a
//! caller-owned [`ec::Context`].
//!
//! Everything is generic over `f32` and `f64` (and `Complex` of either
//! where it applies).

#![forbid(unsafe_code)]
// BLAS/LAPACK-shaped signatures; `!(a < b)` is how NaN gets routed.
#![allow(clippy::too_many_arguments, clippy::neg_cmp_op_on_partial_ord)]

pub mod blas1;
pub mod blas23;
pub mod conformance;
pub mod ec;
pub mod error;
pub mod lapack;
pub mod numeric;
pub mod probe;
pub mod view;

pub use ec::{Context, FlagReport};
pub use error::{BlasError, ViewError};
pub use num_complex::Complex;
pub use numeric::{machine_params, MachineParams, Precision, Real, Scalar};
pub use view::{MatrixView, MatrixViewMut, VectorView, VectorViewMut};

pub type C32 = Complex<f32>;
pub type C64 = Complex<f64>;

pub type MatrixViewF32<'a> = MatrixView<'a, f32>;
pub type MatrixViewF64<'a> = MatrixView<'a, f64>;
pub type MatrixViewMutF32<'a> = MatrixViewMut<'a, f32>;
pub type MatrixViewMutF64<'a> = MatrixViewMut<'a, f64>;
pub type VectorViewF32<'a> = VectorView<'a, f32>;
pub type VectorViewF64<'a> = VectorView<'a, f64>;

/// `machine_params::<f32>()`.
pub fn sparams() -> MachineParams<f32> {
    machine_params::<f32>()
}

/// `machine_params::<f64>()`.
pub fn dparams() -> MachineParams<f64> {
    machine_params::<f64>()
}
