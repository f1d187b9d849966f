use super::frame::{checked, copy_block, extent, ArgMat, Frame, Outcome};
use super::getrf2::{argument_error, getrf2_core, validate_getrf};
use super::LuOptions;
use crate::blas23::{gemm, laswp, trsm, Diag, Side, Trans, Uplo};
use crate::ec::{check_call, checkinit1, checkinit2, update_info, Context, FlagReport, InOut, InternalState};
use crate::numeric::{Real, Scalar};
use crate::view::{MatrixView, MatrixViewMut};

const NUM_ARGS: usize = 1;
const NUM_CALLS: usize = 2;

/// Blocked LU on an already validated view.
pub(crate) fn getrf_core<T: Real + Scalar>(
    mut st: InternalState,
    a: &mut MatrixViewMut<'_, T>,
    ipiv: &mut [i32],
    info_array: &mut [i32],
    fr: &Frame<'_>,
    opts: &LuOptions,
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

    let k = m.min(n);
    let nb = opts.nb;
    let seeding = opts.seed_prechecked && st.what() >= 1 && st.how() >= 1;
    let mut legacy = 0;

    if nb <= 1 || nb >= k {
        let mut tmp1 = [-1i32; 9];
        if seeding && (info_array[6] == 0 || info_array[6] == 1) {
            tmp1[6] = info_array[6];
        }
        let cst = checkinit1(st.flags_call, fr.ctx);
        let out = getrf2_core(cst, a, ipiv, &mut tmp1, &fr.child::<T>("GETRF2"), opts.seed_prechecked);
        legacy = out.legacy;
        check_call(&mut st, &tmp1, info_array, big_n + 2, 8);
    } else {
        for j in (0..k).step_by(nb) {
            let jb = nb.min(k - j);
            let mut tmp2 = [-1i32; 9];
            let out = {
                let cst = checkinit1(st.flags_call, fr.ctx);
                let mut panel = a.sub_mut(j, j, m - j, jb);
                getrf2_core(cst, &mut panel, &mut ipiv[j..j + jb], &mut tmp2, &fr.child::<T>("GETRF2"), opts.seed_prechecked)
            };
            check_call(&mut st, &tmp2, info_array, big_n + 3, 9);
            if legacy == 0 && out.legacy > 0 {
                legacy = out.legacy + j as i32;
            }
            for p in &mut ipiv[j..j + jb] {
                *p += j as i32;
            }
            let (mut left, mut rest) = a.split_cols_mut(j);
            if j > 0 {
                laswp(&mut left, j + 1, j + jb, ipiv, 1).expect("pivots in range");
            }
            if j + jb < n {
                let (panel, mut right) = rest.split_cols_mut(jb);
                laswp(&mut right, j + 1, j + jb, ipiv, 1).expect("pivots in range");
                let l11 = panel.as_view().sub(j, 0, jb, jb);
                trsm(Side::Left, Uplo::Lower, Trans::No, Diag::Unit, <T as Scalar>::one(), l11, &mut right.sub_mut(j, 0, jb, n - j - jb))
                    .expect("conforming blocks");
                if j + jb < m {
                    let (u12, r, c) = copy_block(right.as_view().sub(j, 0, jb, n - j - jb));
                    let u12 = MatrixView::new(&u12, r, c, r.max(1)).expect("dense copy");
                    let l21 = panel.as_view().sub(j + jb, 0, m - j - jb, jb);
                    gemm(Trans::No, Trans::No, -<T as Scalar>::one(), l21, u12, <T as Scalar>::one(), &mut right.sub_mut(j + jb, 0, m - j - jb, n - j - jb))
                        .expect("conforming blocks");
                }
            }
        }
    }

    if !checking {
        return Outcome { info: 0, legacy };
    }
    checked(fr, &mut st, &mut ArgMat::Exclusive(a), legacy, info_array, 3, InOut::InOutAtOutput, big_n + 1, 7);
    let info = update_info(legacy, info_array, &st);
    fr.report(&st, info, info_array);
    Outcome { info, legacy }
}

/// Blocked LU factorization `A = P·L·U` with exception checking, default options.
///
/// INFO codes match [`getrf2_ec`](super::getrf2_ec), with `n+2` for the
/// unblocked internal call and `n+3` for the panel calls.
#[allow(clippy::too_many_arguments)]
pub fn getrf_ec<T: Real + Scalar>(
    m: i32,
    n: i32,
    a: &mut [T],
    lda: i32,
    ipiv: &mut [i32],
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
) -> i32 {
    getrf_ec_with(m, n, a, lda, ipiv, flags, info_array, context, &LuOptions::default())
}

/// [`getrf_ec`] with explicit options.
#[allow(clippy::too_many_arguments)]
pub fn getrf_ec_with<T: Real + Scalar>(
    m: i32,
    n: i32,
    a: &mut [T],
    lda: i32,
    ipiv: &mut [i32],
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
    opts: &LuOptions,
) -> i32 {
    let mut st = checkinit1(flags, context);
    let fr = Frame::root::<T>(context, "GETRF");
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
    getrf_core(st, &mut av, ipiv, info_array, &fr, opts).info
}

/// [`getrf_ec`] with checking and reporting off.
pub fn getrf<T: Real + Scalar>(m: i32, n: i32, a: &mut [T], lda: i32, ipiv: &mut [i32]) -> i32 {
    getrf_ec(m, n, a, lda, ipiv, FlagReport::LEGACY, &mut [0], None)
}
