use super::{op_at, op_dims, Trans};
use crate::error::BlasError;
use crate::numeric::Scalar;
use crate::view::{MatrixView, MatrixViewMut};

/// `C ← alpha·op(A)·op(B) + beta·C`.
///
/// `alpha = 0` leaves A and B unread. `beta = 0` assigns without reading C.
pub fn gemm<S: Scalar>(
    trans_a: Trans,
    trans_b: Trans,
    alpha: S,
    a: MatrixView<'_, S>,
    b: MatrixView<'_, S>,
    beta: S,
    c: &mut MatrixViewMut<'_, S>,
) -> Result<(), BlasError> {
    let (m, n) = (c.rows(), c.cols());
    let (am, k) = op_dims(&a, trans_a);
    let (bk, bn) = op_dims(&b, trans_b);
    if am != m {
        return Err(BlasError::new("GEMM", 7));
    }
    if bk != k || bn != n {
        return Err(BlasError::new("GEMM", 9));
    }
    if m == 0 || n == 0 {
        return Ok(());
    }
    let zero = S::zero();
    if alpha == zero || k == 0 {
        scale_c(beta, c);
        return Ok(());
    }
    for j in 0..n {
        for i in 0..m {
            let mut t = zero;
            for l in 0..k {
                t = t + op_at(&a, trans_a, i, l) * op_at(&b, trans_b, l, j);
            }
            let v = if beta == zero { alpha * t } else { alpha * t + beta * c.at(i, j) };
            c.set(i, j, v);
        }
    }
    Ok(())
}

fn scale_c<S: Scalar>(beta: S, c: &mut MatrixViewMut<'_, S>) {
    if beta == S::one() {
        return;
    }
    for j in 0..c.cols() {
        for x in c.col_mut(j) {
            *x = if beta == S::zero() { S::zero() } else { beta * *x };
        }
    }
}
