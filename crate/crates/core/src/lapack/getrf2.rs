use super::frame::{checked, copy_block, extent, needed_info_len, ArgMat, Frame, Outcome};
use crate::blas1::iamax_real;
use crate::blas23::{gemm, laswp, scal, trsm, Diag, Side, Trans, Uplo};
use crate::ec::{check_call, checkinit1, checkinit2, update_info, Context, FlagReport, InOut, InternalState};
use crate::numeric::{machine_params, Real, Scalar};
use crate::view::{MatrixView, MatrixViewMut, VectorView, VectorViewMut};

const NUM_ARGS: usize = 1;
const NUM_CALLS: usize = 2;

/// Recursive LU with partial pivoting on an already validated view.
pub(crate) fn getrf2_core<T: Real + Scalar>(
    mut st: InternalState,
    a: &mut MatrixViewMut<'_, T>,
    ipiv: &mut [i32],
    info_array: &mut [i32],
    fr: &Frame<'_>,
    seed: bool,
) -> Outcome {
    let (m, n) = (a.rows(), a.cols());
    let checking = st.what() != -1;
    if checking {
        checkinit2(&mut st, 0, NUM_ARGS, NUM_CALLS, info_array);
    }
    if m == 0 || n == 0 {
        return Outcome { info: 0, legacy: 0 };
    }
    let big_n = n as i32;
    checked(fr, &mut st, &mut ArgMat::Exclusive(a), 0, info_array, 3, InOut::InOutAtInput, 0, 7);

    let mut legacy = 0;
    let zero = <T as Scalar>::zero();
    if m == 1 {
        ipiv[0] = 1;
        if a.at(0, 0) == zero {
            legacy = 1;
        }
    } else if n == 1 {
        let sfmin = machine_params::<T>().sfmin;
        let i = iamax_real(VectorView::from_slice(a.col_mut(0)));
        ipiv[0] = i as i32;
        if a.at(i - 1, 0) != zero {
            a.swap_rows(0, i - 1);
            let piv = a.at(0, 0);
            let col = &mut a.col_mut(0)[1..];
            if piv.abs() >= sfmin {
                scal(<T as Scalar>::one() / piv, &mut VectorViewMut::from_slice(col));
            } else {
                for x in col.iter_mut() {
                    *x /= piv;
                }
            }
        } else {
            legacy = 1;
        }
    } else {
        let n1 = m.min(n) / 2;
        let n2 = n - n1;
        let k = m.min(n);
        let seeding = seed && st.what() >= 1 && st.how() >= 1;

        // left panel [A11; A21]
        let mut tmp1 = [-1i32; 9];
        if seeding && info_array[6] == 0 {
            // a clean full matrix has clean columns; an exceptional one says nothing about them
            tmp1[6] = 0;
        }
        let out1 = {
            let cst = checkinit1(st.flags_call, fr.ctx);
            let mut left = a.sub_mut(0, 0, m, n1);
            getrf2_core(cst, &mut left, &mut ipiv[..n1], &mut tmp1, &fr.child::<T>("GETRF2"), seed)
        };
        if legacy == 0 && out1.legacy > 0 {
            legacy = out1.legacy;
        }
        check_call(&mut st, &tmp1, info_array, big_n + 2, 8);

        {
            let (left, mut right) = a.split_cols_mut(n1);
            laswp(&mut right, 1, n1, ipiv, 1).expect("pivots from the panel are in range");
            let a11 = left.as_view().sub(0, 0, n1, n1);
            trsm(Side::Left, Uplo::Lower, Trans::No, Diag::Unit, <T as Scalar>::one(), a11, &mut right.sub_mut(0, 0, n1, n2))
                .expect("conforming blocks");
            let (u12, r, c) = copy_block(right.as_view().sub(0, 0, n1, n2));
            let u12 = MatrixView::new(&u12, r, c, r.max(1)).expect("dense copy");
            let a21 = left.as_view().sub(n1, 0, m - n1, n1);
            gemm(Trans::No, Trans::No, -<T as Scalar>::one(), a21, u12, <T as Scalar>::one(), &mut right.sub_mut(n1, 0, m - n1, n2))
                .expect("conforming blocks");
        }

        // trailing block A22
        let mut tmp2 = [-1i32; 9];
        let out2 = {
            let cst = checkinit1(st.flags_call, fr.ctx);
            let mut a22 = a.sub_mut(n1, n1, m - n1, n2);
            getrf2_core(cst, &mut a22, &mut ipiv[n1..k], &mut tmp2, &fr.child::<T>("GETRF2"), seed)
        };
        check_call(&mut st, &tmp2, info_array, big_n + 3, 9);
        if legacy == 0 && out2.legacy > 0 {
            legacy = out2.legacy + n1 as i32;
        }
        for p in &mut ipiv[n1..k] {
            *p += n1 as i32;
        }
        let mut left = a.sub_mut(0, 0, m, n1);
        laswp(&mut left, n1 + 1, k, ipiv, 1).expect("pivots in range");
    }

    if !checking {
        return Outcome { info: 0, legacy };
    }
    checked(fr, &mut st, &mut ArgMat::Exclusive(a), legacy, info_array, 3, InOut::InOutAtOutput, big_n + 1, 7);
    let info = update_info(legacy, info_array, &st);
    fr.report(&st, info, info_array);
    Outcome { info, legacy }
}

/// Argument validation shared by the factorization entry points.
/// Returns the legacy error code (0 when valid).
pub(crate) fn validate_getrf<T>(st: &InternalState, m: i32, n: i32, a: &[T], lda: i32, ipiv: &[i32], info_array: &[i32], info_pos: i32) -> i32 {
    if m < 0 {
        return -1;
    }
    if n < 0 {
        return -2;
    }
    if lda < m.max(1) {
        return -4;
    }
    let (mu, nu) = (m as usize, n as usize);
    if a.len() < extent(mu, nu, lda as usize) {
        return -3;
    }
    if ipiv.len() < mu.min(nu) {
        return -5;
    }
    if info_array.len() < needed_info_len(st, NUM_ARGS, NUM_CALLS) {
        return info_pos;
    }
    0
}

/// Report a bad argument through the protocol and return its code.
pub(crate) fn argument_error(st: &mut InternalState, info: i32, num_args: usize, num_calls: usize, info_array: &mut [i32], fr: &Frame<'_>) -> i32 {
    if info_array.len() >= needed_info_len(st, num_args, num_calls) {
        checkinit2(st, info, num_args, num_calls, info_array);
        fr.report(st, info, info_array);
    }
    info
}

/// Recursive LU factorization `A = P·L·U` with exception checking.
///
/// INFO: `-k` for an illegal argument `k`; `i > 0` if `U(i, i)` is exactly
/// zero; otherwise, depending on the flags, `-3` (A had Inf/NaN on input),
/// `n+1` (on output), `n+2` / `n+3` (first / second internal call signaled).
#[allow(clippy::too_many_arguments)]
pub fn getrf2_ec<T: Real + Scalar>(
    m: i32,
    n: i32,
    a: &mut [T],
    lda: i32,
    ipiv: &mut [i32],
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
) -> i32 {
    let mut st = checkinit1(flags, context);
    let fr = Frame::root::<T>(context, "GETRF2");
    let info = validate_getrf(&st, m, n, a, lda, ipiv, info_array, -8);
    if info != 0 {
        if st.what() == -1 {
            return 0;
        }
        return argument_error(&mut st, info, NUM_ARGS, NUM_CALLS, info_array, &fr);
    }
    let (mu, nu, ld) = (m as usize, n as usize, lda as usize);
    let len = extent(mu, nu, ld);
    let mut av = MatrixViewMut::new(&mut a[..len], mu, nu, ld).expect("validated");
    getrf2_core(st, &mut av, ipiv, info_array, &fr, true).info
}

/// [`getrf2_ec`] with checking and reporting off.
pub fn getrf2<T: Real + Scalar>(m: i32, n: i32, a: &mut [T], lda: i32, ipiv: &mut [i32]) -> i32 {
    getrf2_ec(m, n, a, lda, ipiv, FlagReport::LEGACY, &mut [0], None)
}
