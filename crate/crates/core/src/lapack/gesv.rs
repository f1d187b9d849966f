use super::frame::{checked, extent, needed_info_len, ArgMat, Frame};
use super::getrf::getrf_core;
use super::getrf2::argument_error;
use super::getrs::getrs_core;
use super::LuOptions;
use crate::blas23::Trans;
use crate::ec::{check_call, checkinit1, checkinit2, update_info, Context, FlagReport, InOut, InternalState};
use crate::numeric::{Real, Scalar};
use crate::view::MatrixViewMut;

const NUM_ARGS: usize = 2;
const NUM_CALLS: usize = 2;

#[allow(clippy::too_many_arguments)]
fn gesv_core<T: Real + Scalar>(
    mut st: InternalState,
    a: &mut MatrixViewMut<'_, T>,
    ipiv: &mut [i32],
    b: &mut MatrixViewMut<'_, T>,
    info_array: &mut [i32],
    fr: &Frame<'_>,
    opts: &LuOptions,
) -> i32 {
    let checking = st.what() != -1;
    if checking {
        checkinit2(&mut st, 0, NUM_ARGS, NUM_CALLS, info_array);
    }
    let n = a.rows();
    if n == 0 {
        return 0;
    }
    let big_n = n as i32;
    checked(fr, &mut st, &mut ArgMat::Exclusive(a), 0, info_array, 3, InOut::InOutAtInput, 0, 7);
    checked(fr, &mut st, &mut ArgMat::Exclusive(b), 0, info_array, 6, InOut::InOutAtInput, 0, 8);
    let seeding = opts.seed_prechecked && st.what() >= 1 && st.how() >= 1;

    let mut tmp_f = [-1i32; 9];
    if seeding {
        tmp_f[6] = info_array[6];
    }
    let cst = checkinit1(st.flags_call, fr.ctx);
    let fac = getrf_core(cst, a, ipiv, &mut tmp_f, &fr.child::<T>("GETRF"), opts);
    check_call(&mut st, &tmp_f, info_array, big_n + 3, 9);
    let legacy = fac.legacy;

    if legacy == 0 || !checking {
        let mut tmp_s = [-1i32; 8];
        if seeding {
            tmp_s[7] = info_array[7];
        }
        let cst = checkinit1(st.flags_call, fr.ctx);
        getrs_core(cst, Trans::No, a.as_view(), ipiv, b, &mut tmp_s, &fr.child::<T>("GETRS"));
        check_call(&mut st, &tmp_s, info_array, big_n + 4, 10);
    }
    if !checking {
        return 0;
    }
    checked(fr, &mut st, &mut ArgMat::Exclusive(a), legacy, info_array, 3, InOut::InOutAtOutput, big_n + 1, 7);
    checked(fr, &mut st, &mut ArgMat::Exclusive(b), legacy, info_array, 6, InOut::InOutAtOutput, big_n + 2, 8);
    let info = update_info(legacy, info_array, &st);
    fr.report(&st, info, info_array);
    info
}

/// Solve `A·X = B` by LU with partial pivoting, default options.
///
/// INFO: `-k` for an illegal argument `k`; `i > 0` if `U(i, i)` is exactly
/// zero (no solve is attempted). With checking on, a clean-structured run
/// may also return `-3` / `-6` (A / B had Inf or NaN on input), `n+1` /
/// `n+2` (on output) or `n+3` / `n+4` (factorization / solve signaled).
#[allow(clippy::too_many_arguments)]
pub fn gesv_ec<T: Real + Scalar>(
    n: i32,
    nrhs: i32,
    a: &mut [T],
    lda: i32,
    ipiv: &mut [i32],
    b: &mut [T],
    ldb: i32,
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
) -> i32 {
    gesv_ec_with(n, nrhs, a, lda, ipiv, b, ldb, flags, info_array, context, &LuOptions::default())
}

/// [`gesv_ec`] with explicit options.
#[allow(clippy::too_many_arguments)]
pub fn gesv_ec_with<T: Real + Scalar>(
    n: i32,
    nrhs: i32,
    a: &mut [T],
    lda: i32,
    ipiv: &mut [i32],
    b: &mut [T],
    ldb: i32,
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
    opts: &LuOptions,
) -> i32 {
    let mut st = checkinit1(flags, context);
    let fr = Frame::root::<T>(context, "GESV");
    let info = if n < 0 {
        -1
    } else if nrhs < 0 {
        -2
    } else if lda < n.max(1) {
        -4
    } else if ldb < n.max(1) {
        -7
    } else if a.len() < extent(n as usize, n as usize, lda as usize) {
        -3
    } else if ipiv.len() < n as usize {
        -5
    } else if b.len() < extent(n as usize, nrhs as usize, ldb as usize) {
        -6
    } else if info_array.len() < needed_info_len(&st, NUM_ARGS, NUM_CALLS) {
        -10
    } else {
        0
    };
    if info != 0 {
        if st.what() == -1 {
            return 0;
        }
        return argument_error(&mut st, info, NUM_ARGS, NUM_CALLS, info_array, &fr);
    }
    let (nu, nr) = (n as usize, nrhs as usize);
    let la = extent(nu, nu, lda as usize);
    let lb = extent(nu, nr, ldb as usize);
    let mut av = MatrixViewMut::new(&mut a[..la], nu, nu, lda as usize).expect("validated");
    let mut bv = MatrixViewMut::new(&mut b[..lb], nu, nr, ldb as usize).expect("validated");
    gesv_core(st, &mut av, ipiv, &mut bv, info_array, &fr, opts)
}

/// [`gesv_ec`] with checking and reporting off.
#[allow(clippy::too_many_arguments)]
pub fn gesv<T: Real + Scalar>(n: i32, nrhs: i32, a: &mut [T], lda: i32, ipiv: &mut [i32], b: &mut [T], ldb: i32) -> i32 {
    gesv_ec(n, nrhs, a, lda, ipiv, b, ldb, FlagReport::LEGACY, &mut [0], None)
}
