use super::{op_at, Diag, Side, Trans, Uplo};
use crate::error::BlasError;
use crate::numeric::Scalar;
use crate::view::{MatrixView, MatrixViewMut, VectorViewMut};

/// Substitution on `T x = b` where `t(i, j)` reads `T` and `upper` says
/// which triangle of `T` is referenced. No entry is tested against zero.
fn substitute<S: Scalar>(n: usize, upper: bool, unit: bool, t: impl Fn(usize, usize) -> S, x: &mut [S]) {
    if upper {
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s = s - t(i, j) * x[j];
            }
            x[i] = if unit { s } else { s.div(t(i, i)) };
        }
    } else {
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s = s - t(i, j) * x[j];
            }
            x[i] = if unit { s } else { s.div(t(i, i)) };
        }
    }
}

// op(A) is upper triangular iff A is upper and not transposed, or lower and transposed.
fn op_upper(uplo: Uplo, trans: Trans) -> bool {
    (uplo == Uplo::Upper) == (trans == Trans::No)
}

/// Solve `op(A)·x = b` in place.
pub fn trsv<S: Scalar>(
    uplo: Uplo,
    trans: Trans,
    diag: Diag,
    a: MatrixView<'_, S>,
    x: &mut VectorViewMut<'_, S>,
) -> Result<(), BlasError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(BlasError::new("TRSV", 5));
    }
    if x.len() != n {
        return Err(BlasError::new("TRSV", 7));
    }
    let mut buf: Vec<S> = (0..n).map(|i| x.at(i)).collect();
    substitute(n, op_upper(uplo, trans), diag == Diag::Unit, |i, j| op_at(&a, trans, i, j), &mut buf);
    for (i, v) in buf.into_iter().enumerate() {
        x.set(i, v);
    }
    Ok(())
}

/// Solve `op(A)·X = alpha·B` (left) or `X·op(A) = alpha·B` (right), X overwriting B.
///
/// `alpha = 0` sets B to zero without reading A or B.
pub fn trsm<S: Scalar>(
    side: Side,
    uplo: Uplo,
    trans: Trans,
    diag: Diag,
    alpha: S,
    a: MatrixView<'_, S>,
    b: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    let n = a.rows();
    let need = if side == Side::Left { b.rows() } else { b.cols() };
    if a.cols() != n || n != need {
        return Err(BlasError::new("TRSM", 8));
    }
    let (m, nc) = (b.rows(), b.cols());
    if m == 0 || nc == 0 {
        return Ok(());
    }
    if alpha == S::zero() {
        for j in 0..nc {
            b.col_mut(j).fill(S::zero());
        }
        return Ok(());
    }
    let unit = diag == Diag::Unit;
    let upper = op_upper(uplo, trans);
    match side {
        Side::Left => {
            for j in 0..nc {
                let col = b.col_mut(j);
                for v in col.iter_mut() {
                    *v = alpha * *v;
                }
                substitute(n, upper, unit, |i, k| op_at(&a, trans, i, k), col);
            }
        }
        Side::Right => {
            // each row r solves op(A)ᵀ·rᵀ = alpha·(row of B)ᵀ
            let mut row = vec![S::zero(); n];
            for i in 0..m {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = alpha * b.at(i, j);
                }
                substitute(n, !upper, unit, |r, k| op_at(&a, trans, k, r), &mut row);
                for (j, v) in row.iter().enumerate() {
                    b.set(i, j, *v);
                }
            }
        }
    }
    Ok(())
}
