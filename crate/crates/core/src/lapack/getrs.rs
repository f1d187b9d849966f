use super::frame::{checked, extent, needed_info_len, ArgMat, Frame, Outcome};
use super::getrf2::argument_error;
use crate::blas23::{laswp, trsm, Diag, Side, Trans, Uplo};
use crate::ec::{checkinit1, checkinit2, update_info, Context, FlagReport, InOut, InternalState};
use crate::numeric::{Real, Scalar};
use crate::view::{MatrixView, MatrixViewMut};

const NUM_ARGS: usize = 2;
const NUM_CALLS: usize = 0;

pub(crate) fn parse_trans(c: char) -> Option<Trans> {
    match c.to_ascii_uppercase() {
        'N' => Some(Trans::No),
        'T' => Some(Trans::Trans),
        'C' => Some(Trans::ConjTrans),
        _ => None,
    }
}

/// Apply a computed LU factorization to `B`, in place.
pub(crate) fn getrs_core<T: Real + Scalar>(
    mut st: InternalState,
    trans: Trans,
    a: MatrixView<'_, T>,
    ipiv: &[i32],
    b: &mut MatrixViewMut<'_, T>,
    info_array: &mut [i32],
    fr: &Frame<'_>,
) -> Outcome {
    let checking = st.what() != -1;
    if checking {
        checkinit2(&mut st, 0, NUM_ARGS, NUM_CALLS, info_array);
    }
    let n = a.rows();
    if n == 0 || b.cols() == 0 {
        return Outcome { info: 0, legacy: 0 };
    }
    checked(fr, &mut st, &mut ArgMat::Shared(a), 0, info_array, 4, InOut::InputOnly, 0, 7);
    checked(fr, &mut st, &mut ArgMat::Exclusive(b), 0, info_array, 7, InOut::InOutAtInput, 0, 8);

    let one = <T as Scalar>::one();
    let ok = "conforming blocks";
    if trans == Trans::No {
        laswp(b, 1, n, ipiv, 1).expect("pivots in range");
        trsm(Side::Left, Uplo::Lower, Trans::No, Diag::Unit, one, a, b).expect(ok);
        trsm(Side::Left, Uplo::Upper, Trans::No, Diag::NonUnit, one, a, b).expect(ok);
    } else {
        trsm(Side::Left, Uplo::Upper, trans, Diag::NonUnit, one, a, b).expect(ok);
        trsm(Side::Left, Uplo::Lower, trans, Diag::Unit, one, a, b).expect(ok);
        laswp(b, 1, n, ipiv, -1).expect("pivots in range");
    }

    if !checking {
        return Outcome { info: 0, legacy: 0 };
    }
    checked(fr, &mut st, &mut ArgMat::Exclusive(b), 0, info_array, 7, InOut::InOutAtOutput, 1, 8);
    let info = update_info(0, info_array, &st);
    fr.report(&st, info, info_array);
    Outcome { info, legacy: 0 }
}

/// Solve `op(A)·X = B` with the factors from [`getrf_ec`](super::getrf_ec).
///
/// `trans` is `'N'`, `'T'` or `'C'` (any case). INFO: `-k` for an illegal
/// argument `k`; `-4` / `-7` if A / B held Inf or NaN on input; `1` if B
/// does on output.
#[allow(clippy::too_many_arguments)]
pub fn getrs_ec<T: Real + Scalar>(
    trans: char,
    n: i32,
    nrhs: i32,
    a: &[T],
    lda: i32,
    ipiv: &[i32],
    b: &mut [T],
    ldb: i32,
    flags: FlagReport,
    info_array: &mut [i32],
    context: Option<&dyn Context>,
) -> i32 {
    let mut st = checkinit1(flags, context);
    let fr = Frame::root::<T>(context, "GETRS");
    let t = parse_trans(trans);
    let info = if t.is_none() {
        -1
    } else if n < 0 {
        -2
    } else if nrhs < 0 {
        -3
    } else if lda < n.max(1) {
        -5
    } else if ldb < n.max(1) {
        -8
    } else if a.len() < extent(n as usize, n as usize, lda as usize) {
        -4
    } else if ipiv.len() < n as usize || ipiv[..n as usize].iter().any(|&p| p < 1 || p > n) {
        -6
    } else if b.len() < extent(n as usize, nrhs as usize, ldb as usize) {
        -7
    } else if info_array.len() < needed_info_len(&st, NUM_ARGS, NUM_CALLS) {
        -11
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
    let av = MatrixView::new(&a[..extent(nu, nu, lda as usize)], nu, nu, lda as usize).expect("validated");
    let len = extent(nu, nr, ldb as usize);
    let mut bv = MatrixViewMut::new(&mut b[..len], nu, nr, ldb as usize).expect("validated");
    getrs_core(st, t.expect("validated"), av, ipiv, &mut bv, info_array, &fr).info
}

/// [`getrs_ec`] with checking and reporting off.
#[allow(clippy::too_many_arguments)]
pub fn getrs<T: Real + Scalar>(trans: char, n: i32, nrhs: i32, a: &[T], lda: i32, ipiv: &[i32], b: &mut [T], ldb: i32) -> i32 {
    getrs_ec(trans, n, nrhs, a, lda, ipiv, b, ldb, FlagReport::LEGACY, &mut [0], None)
}
