use crate::numeric::Scalar;
use crate::view::{MatrixView, VectorView};

// A NaN compares unequal to zero, so it counts as nonzero here.

/// 1-based index of the first nonzero entry, or 0.
pub fn first_nonzero<S: Scalar>(v: VectorView<'_, S>) -> usize {
    v.iter().position(|x| !x.is_zero()).map_or(0, |i| i + 1)
}

/// 1-based index of the last nonzero entry, or 0.
pub fn last_nonzero<S: Scalar>(v: VectorView<'_, S>) -> usize {
    (0..v.len()).rev().find(|&i| !v.at(i).is_zero()).map_or(0, |i| i + 1)
}

fn row_nonzero<S: Scalar>(m: &MatrixView<'_, S>, i: usize) -> bool {
    (0..m.cols()).any(|j| !m.at(i, j).is_zero())
}

/// 1-based index of the first row holding a nonzero, or 0.
pub fn first_nonzero_row<S: Scalar>(m: MatrixView<'_, S>) -> usize {
    (0..m.rows()).find(|&i| row_nonzero(&m, i)).map_or(0, |i| i + 1)
}

/// 1-based index of the last row holding a nonzero, or 0.
pub fn last_nonzero_row<S: Scalar>(m: MatrixView<'_, S>) -> usize {
    (0..m.rows()).rev().find(|&i| row_nonzero(&m, i)).map_or(0, |i| i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn vectors() {
        let v = [0.0, 0.0, 3.0, 0.0];
        assert_eq!(first_nonzero(VectorView::from_slice(&v)), 3);
        assert_eq!(last_nonzero(VectorView::from_slice(&v)), 3);
        let z = [0.0f32; 4];
        assert_eq!(first_nonzero(VectorView::from_slice(&z)), 0);
        assert_eq!(last_nonzero(VectorView::from_slice(&z)), 0);
        let n = [0.0, f64::NAN, 0.0];
        assert_eq!(first_nonzero(VectorView::from_slice(&n)), 2);
        let i = [f64::NEG_INFINITY, 0.0];
        assert_eq!(last_nonzero(VectorView::from_slice(&i)), 1);
        let c = [Complex::new(0.0, 0.0), Complex::new(0.0, -1.0)];
        assert_eq!(first_nonzero(VectorView::from_slice(&c)), 2);
    }

    #[test]
    fn rows() {
        // 3x2, row 2 (1-based) holds a NaN
        let d = [0.0, f64::NAN, 0.0, 0.0, 0.0, 0.0];
        let m = MatrixView::new(&d, 3, 2, 3).unwrap();
        assert_eq!(first_nonzero_row(m), 2);
        assert_eq!(last_nonzero_row(m), 2);
        let z = [0.0; 6];
        assert_eq!(first_nonzero_row(MatrixView::new(&z, 3, 2, 3).unwrap()), 0);
    }
}
