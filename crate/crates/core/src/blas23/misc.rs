use crate::error::BlasError;
use crate::numeric::Scalar;
use crate::view::{MatrixViewMut, VectorViewMut};

/// Apply row interchanges `i ↔ ipiv(i)` for `i = k1..=k2` (1-based).
///
/// Row `i` reads `ipiv[k1 - 1 + (i - k1)·|incx|]`. A negative `incx`
/// applies the same interchanges in reverse order.
pub fn laswp<S: Scalar>(
    a: &mut MatrixViewMut<'_, S>,
    k1: usize,
    k2: usize,
    ipiv: &[i32],
    incx: i32,
) -> Result<(), BlasError> {
    let m = a.rows();
    if k1 < 1 {
        return Err(BlasError::new("LASWP", 4));
    }
    if k2 < k1 || k2 > m {
        return Err(BlasError::new("LASWP", 5));
    }
    if incx == 0 {
        return Err(BlasError::new("LASWP", 7));
    }
    let step = incx.unsigned_abs() as usize;
    let slot = |i: usize| k1 - 1 + (i - k1) * step;
    if ipiv.len() <= slot(k2) {
        return Err(BlasError::new("LASWP", 6));
    }
    if (k1..=k2).any(|i| ipiv[slot(i)] < 1 || ipiv[slot(i)] as usize > m) {
        return Err(BlasError::new("LASWP", 6));
    }
    let mut apply = |i: usize| a.swap_rows(i - 1, ipiv[slot(i)] as usize - 1);
    if incx > 0 {
        (k1..=k2).for_each(&mut apply);
    } else {
        (k1..=k2).rev().for_each(&mut apply);
    }
    Ok(())
}

/// `x ← alpha·x` with no special case for any `alpha`.
pub fn scal<S: Scalar>(alpha: S, x: &mut VectorViewMut<'_, S>) {
    for i in 0..x.len() {
        let v = alpha * x.at(i);
        x.set(i, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scal_examples() {
        let mut x = [f64::INFINITY];
        scal(0.0, &mut VectorViewMut::from_slice(&mut x));
        assert!(x[0].is_nan());
        let mut y = [1.0, 2.0];
        scal(2.0, &mut VectorViewMut::from_slice(&mut y));
        assert_eq!(y, [2.0, 4.0]);
        let orig = [0.1f64, -3e-310, 7.5e300];
        let mut z = orig;
        scal(1.0, &mut VectorViewMut::from_slice(&mut z));
        assert!(z.iter().zip(&orig).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn laswp_examples() {
        let mut a = [1.0, 2.0, 3.0, 4.0];
        let orig = a;
        laswp(&mut MatrixViewMut::new(&mut a, 2, 2, 2).unwrap(), 1, 2, &[1, 2], 1).unwrap();
        assert_eq!(a, orig);
        laswp(&mut MatrixViewMut::new(&mut a, 2, 2, 2).unwrap(), 1, 2, &[2, 2], 1).unwrap();
        assert_eq!(a, [2.0, 1.0, 4.0, 3.0]);
    }

    #[test]
    fn laswp_errors() {
        let mut a = [0.0; 4];
        let mut av = MatrixViewMut::new(&mut a, 2, 2, 2).unwrap();
        assert_eq!(laswp(&mut av, 0, 1, &[1], 1).unwrap_err().position, 4);
        assert_eq!(laswp(&mut av, 2, 1, &[1], 1).unwrap_err().position, 5);
        assert_eq!(laswp(&mut av, 1, 2, &[1, 3], 1).unwrap_err().position, 6);
        assert_eq!(laswp(&mut av, 1, 2, &[1], 1).unwrap_err().position, 6);
        assert_eq!(laswp(&mut av, 1, 2, &[1, 2], 0).unwrap_err().position, 7);
    }

    #[test]
    fn laswp_strided_pivots() {
        let mut a = [1.0, 2.0, 3.0];
        laswp(&mut MatrixViewMut::new(&mut a, 3, 1, 3).unwrap(), 1, 2, &[3, 99, 3], 2).unwrap();
        // row1↔row3 then row2↔row3
        assert_eq!(a, [3.0, 1.0, 2.0]);
    }

    fn pivots() -> impl Strategy<Value = Vec<i32>> {
        (1usize..7).prop_flat_map(|m| (0..m).map(|i| ((i as i32 + 1)..=m as i32).boxed()).collect::<Vec<_>>())
    }

    proptest! {
        #[test]
        fn forward_then_reverse_restores(ipiv in pivots(), seed in any::<u64>()) {
            let m = ipiv.len();
            let a: Vec<f64> = (0..m * 3).map(|k| (k as u64 ^ seed) as f64).collect();
            let mut b = a.clone();
            laswp(&mut MatrixViewMut::new(&mut b, m, 3, m).unwrap(), 1, m, &ipiv, 1).unwrap();
            laswp(&mut MatrixViewMut::new(&mut b, m, 3, m).unwrap(), 1, m, &ipiv, -1).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
