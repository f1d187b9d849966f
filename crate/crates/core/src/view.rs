//! Strided views over column-major storage.

use crate::error::ViewError;

fn vector_extent(n: usize, inc: usize) -> usize {
    if n == 0 {
        0
    } else {
        1 + (n - 1) * inc
    }
}

fn matrix_extent(m: usize, n: usize, ld: usize) -> usize {
    if m == 0 || n == 0 {
        0
    } else {
        (n - 1) * ld + m
    }
}

fn check_inc(inc: isize) -> Result<usize, ViewError> {
    if inc < 1 {
        Err(ViewError::BadIncrement(inc))
    } else {
        Ok(inc as usize)
    }
}

fn check_len(have: usize, need: usize) -> Result<(), ViewError> {
    if have < need {
        Err(ViewError::TooShort { have, need })
    } else {
        Ok(())
    }
}

fn check_ld(ld: usize, rows: usize) -> Result<(), ViewError> {
    if ld < rows.max(1) {
        Err(ViewError::BadLeadingDimension { ld, rows })
    } else {
        Ok(())
    }
}

/// Read-only vector of `n` elements at stride `inc`.
#[derive(Debug, Clone, Copy)]
pub struct VectorView<'a, T> {
    data: &'a [T],
    n: usize,
    inc: usize,
}

impl<'a, T: Copy> VectorView<'a, T> {
    pub fn new(data: &'a [T], n: usize, inc: isize) -> Result<Self, ViewError> {
        let inc = check_inc(inc)?;
        check_len(data.len(), vector_extent(n, inc))?;
        Ok(VectorView { data, n, inc })
    }

    /// Contiguous view of the whole slice.
    pub fn from_slice(data: &'a [T]) -> Self {
        VectorView { data, n: data.len(), inc: 1 }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn inc(&self) -> usize {
        self.inc
    }

    /// Element `i`, 0-based.
    #[inline]
    pub fn at(&self, i: usize) -> T {
        self.data[i * self.inc]
    }

    pub fn iter(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |i| self.data[i * self.inc])
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.iter().collect()
    }
}

/// Mutable vector of `n` elements at stride `inc`.
#[derive(Debug)]
pub struct VectorViewMut<'a, T> {
    data: &'a mut [T],
    n: usize,
    inc: usize,
}

impl<'a, T: Copy> VectorViewMut<'a, T> {
    pub fn new(data: &'a mut [T], n: usize, inc: isize) -> Result<Self, ViewError> {
        let inc = check_inc(inc)?;
        check_len(data.len(), vector_extent(n, inc))?;
        Ok(VectorViewMut { data, n, inc })
    }

    pub fn from_slice(data: &'a mut [T]) -> Self {
        let n = data.len();
        VectorViewMut { data, n, inc: 1 }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn at(&self, i: usize) -> T {
        self.data[i * self.inc]
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: T) {
        self.data[i * self.inc] = v;
    }

    pub fn as_view(&self) -> VectorView<'_, T> {
        VectorView { data: self.data, n: self.n, inc: self.inc }
    }
}

/// Read-only `m × n` column-major matrix with leading dimension `ld`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixView<'a, T> {
    data: &'a [T],
    m: usize,
    n: usize,
    ld: usize,
}

impl<'a, T: Copy> MatrixView<'a, T> {
    pub fn new(data: &'a [T], m: usize, n: usize, ld: usize) -> Result<Self, ViewError> {
        check_ld(ld, m)?;
        check_len(data.len(), matrix_extent(m, n, ld))?;
        Ok(MatrixView { data, m, n, ld })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn ld(&self) -> usize {
        self.ld
    }

    /// Element `(i, j)`, 0-based.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        self.data[i + j * self.ld]
    }

    /// Column `j` as a contiguous slice of length `m`.
    pub fn col(&self, j: usize) -> &'a [T] {
        let s = j * self.ld;
        &self.data[s..s + self.m]
    }

    /// Sub-block starting at `(i, j)`, 0-based.
    pub fn sub(&self, i: usize, j: usize, m: usize, n: usize) -> MatrixView<'a, T> {
        assert!(i + m <= self.m && j + n <= self.n, "sub-block out of range");
        let off = if m == 0 || n == 0 { 0 } else { i + j * self.ld };
        MatrixView { data: &self.data[off.min(self.data.len())..], m, n, ld: self.ld }
    }
}

/// Mutable `m × n` column-major matrix with leading dimension `ld`.
#[derive(Debug)]
pub struct MatrixViewMut<'a, T> {
    data: &'a mut [T],
    m: usize,
    n: usize,
    ld: usize,
}

impl<'a, T: Copy> MatrixViewMut<'a, T> {
    pub fn new(data: &'a mut [T], m: usize, n: usize, ld: usize) -> Result<Self, ViewError> {
        check_ld(ld, m)?;
        check_len(data.len(), matrix_extent(m, n, ld))?;
        Ok(MatrixViewMut { data, m, n, ld })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn ld(&self) -> usize {
        self.ld
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        self.data[i + j * self.ld]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i + j * self.ld] = v;
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i + j * self.ld]
    }

    pub fn col_mut(&mut self, j: usize) -> &mut [T] {
        let s = j * self.ld;
        &mut self.data[s..s + self.m]
    }

    pub fn as_view(&self) -> MatrixView<'_, T> {
        MatrixView { data: self.data, m: self.m, n: self.n, ld: self.ld }
    }

    pub fn rb(&mut self) -> MatrixViewMut<'_, T> {
        MatrixViewMut { data: self.data, m: self.m, n: self.n, ld: self.ld }
    }

    /// Mutable sub-block starting at `(i, j)`, 0-based.
    pub fn sub_mut(&mut self, i: usize, j: usize, m: usize, n: usize) -> MatrixViewMut<'_, T> {
        assert!(i + m <= self.m && j + n <= self.n, "sub-block out of range");
        let off = if m == 0 || n == 0 { 0 } else { i + j * self.ld };
        let len = self.data.len();
        MatrixViewMut { data: &mut self.data[off.min(len)..], m, n, ld: self.ld }
    }

    /// Split at column `j` into columns `[0, j)` and `[j, n)`.
    pub fn split_cols_mut(&mut self, j: usize) -> (MatrixViewMut<'_, T>, MatrixViewMut<'_, T>) {
        assert!(j <= self.n);
        let cut = (j * self.ld).min(self.data.len());
        let (l, r) = self.data.split_at_mut(cut);
        (
            MatrixViewMut { data: l, m: self.m, n: j, ld: self.ld },
            MatrixViewMut { data: r, m: self.m, n: self.n - j, ld: self.ld },
        )
    }

    /// Swap rows `r1` and `r2` across all columns.
    pub fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.n {
            self.data.swap(r1 + j * self.ld, r2 + j * self.ld);
        }
    }

    pub fn into_view(self) -> MatrixView<'a, T> {
        MatrixView { data: self.data, m: self.m, n: self.n, ld: self.ld }
    }
}
