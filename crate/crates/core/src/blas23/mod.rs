//! Level-2/3 kernels.
//!
//! Semantic gates on `alpha` and `beta` are honoured; zeros inside the
//! operands are never used to skip work, so `0·NaN` and `0·Inf` reach the
//! output.

mod gemm;
mod misc;
mod rank;
mod tri;

pub use gemm::gemm;
pub use misc::{laswp, scal};
pub use rank::{ger, gerc, spr, syr, syr2};
pub use tri::{trsm, trsv};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trans {
    No,
    Trans,
    ConjTrans,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uplo {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diag {
    NonUnit,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

use crate::numeric::Scalar;
use crate::view::MatrixView;

/// Element `(i, j)` of `op(A)`.
#[inline]
pub(crate) fn op_at<S: Scalar>(a: &MatrixView<'_, S>, t: Trans, i: usize, j: usize) -> S {
    match t {
        Trans::No => a.at(i, j),
        Trans::Trans => a.at(j, i),
        Trans::ConjTrans => a.at(j, i).conj(),
    }
}

/// Shape of `op(A)`.
#[inline]
pub(crate) fn op_dims<S: Scalar>(a: &MatrixView<'_, S>, t: Trans) -> (usize, usize) {
    match t {
        Trans::No => (a.rows(), a.cols()),
        _ => (a.cols(), a.rows()),
    }
}
