use super::Uplo;
use crate::error::BlasError;
use crate::numeric::Scalar;
use crate::view::{MatrixViewMut, VectorView};

fn ger_impl<S: Scalar>(
    name: &'static str,
    conj_y: bool,
    alpha: S,
    x: VectorView<'_, S>,
    y: VectorView<'_, S>,
    a: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    if x.len() != a.rows() {
        return Err(BlasError::new(name, 4));
    }
    if y.len() != a.cols() {
        return Err(BlasError::new(name, 6));
    }
    if alpha == S::zero() {
        return Ok(());
    }
    for j in 0..a.cols() {
        let yj = if conj_y { y.at(j).conj() } else { y.at(j) };
        let t = alpha * yj;
        for i in 0..a.rows() {
            let v = a.at(i, j) + x.at(i) * t;
            a.set(i, j, v);
        }
    }
    Ok(())
}

/// `A ← A + alpha·x·yᵀ`. `alpha = 0` returns before reading x or y.
pub fn ger<S: Scalar>(
    alpha: S,
    x: VectorView<'_, S>,
    y: VectorView<'_, S>,
    a: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    ger_impl("GER", false, alpha, x, y, a)
}

/// `A ← A + alpha·x·yᴴ`.
pub fn gerc<S: Scalar>(
    alpha: S,
    x: VectorView<'_, S>,
    y: VectorView<'_, S>,
    a: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    ger_impl("GERC", true, alpha, x, y, a)
}

#[inline]
fn in_triangle(uplo: Uplo, i: usize, j: usize) -> bool {
    match uplo {
        Uplo::Upper => i <= j,
        Uplo::Lower => i >= j,
    }
}

/// Symmetric rank-1 update of one triangle: `A ← A + alpha·x·xᵀ`.
///
/// Each entry gets `alpha·(x_i·x_j)`, so an upper and a lower update agree
/// entry for entry under transposition.
pub fn syr<S: Scalar>(
    uplo: Uplo,
    alpha: S,
    x: VectorView<'_, S>,
    a: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(BlasError::new("SYR", 6));
    }
    if x.len() != n {
        return Err(BlasError::new("SYR", 4));
    }
    if alpha == S::zero() {
        return Ok(());
    }
    for j in 0..n {
        for i in 0..n {
            if in_triangle(uplo, i, j) {
                let v = a.at(i, j) + alpha * (x.at(i) * x.at(j));
                a.set(i, j, v);
            }
        }
    }
    Ok(())
}

/// Symmetric rank-2 update of one triangle: `A ← A + alpha·x·yᵀ + alpha·y·xᵀ`.
pub fn syr2<S: Scalar>(
    uplo: Uplo,
    alpha: S,
    x: VectorView<'_, S>,
    y: VectorView<'_, S>,
    a: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(BlasError::new("SYR2", 8));
    }
    if x.len() != n {
        return Err(BlasError::new("SYR2", 4));
    }
    if y.len() != n {
        return Err(BlasError::new("SYR2", 6));
    }
    if alpha == S::zero() {
        return Ok(());
    }
    for j in 0..n {
        for i in 0..n {
            if in_triangle(uplo, i, j) {
                let t = alpha * (x.at(i) * y.at(j)) + alpha * (y.at(i) * x.at(j));
                let v = a.at(i, j) + t;
                a.set(i, j, v);
            }
        }
    }
    Ok(())
}

/// Packed-storage index of `(i, j)` within the stored triangle.
fn packed_index(uplo: Uplo, n: usize, i: usize, j: usize) -> usize {
    match uplo {
        Uplo::Upper => i + j * (j + 1) / 2,
        Uplo::Lower => i - j + j * (2 * n - j + 1) / 2,
    }
}

/// `syr` on a packed triangle of order `x.len()`.
pub fn spr<S: Scalar>(uplo: Uplo, alpha: S, x: VectorView<'_, S>, ap: &mut [S]) -> Result<(), BlasError> {
    let n = x.len();
    if ap.len() < n * (n + 1) / 2 {
        return Err(BlasError::new("SPR", 6));
    }
    if alpha == S::zero() {
        return Ok(());
    }
    for j in 0..n {
        for i in 0..n {
            if in_triangle(uplo, i, j) {
                let k = packed_index(uplo, n, i, j);
                ap[k] = ap[k] + alpha * (x.at(i) * x.at(j));
            }
        }
    }
    Ok(())
}
