use crate::ec::{
    check_arg, report_exceptions, CheckPhase, CheckSite, Context, InOut, InjectValue, InternalState, RoutineName,
};
use crate::numeric::{Real, Scalar};
use crate::view::{MatrixView, MatrixViewMut};

/// Result of an internal call: the INFO it reports and the plain
/// factorization status the caller's control flow depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Outcome {
    pub info: i32,
    pub legacy: i32,
}

/// Call-tree position of one routine invocation.
pub(crate) struct Frame<'c> {
    pub ctx: Option<&'c dyn Context>,
    pub name: RoutineName,
    pub path: String,
    pub depth: usize,
}

impl<'c> Frame<'c> {
    pub fn root<T: Real + Scalar>(ctx: Option<&'c dyn Context>, base: &str) -> Self {
        let name = format!("{}{}", T::PREFIX, base);
        Frame { ctx, name: RoutineName::new(&name).expect("short ascii name"), path: name, depth: 0 }
    }

    pub fn child<T: Real + Scalar>(&self, base: &str) -> Frame<'c> {
        let name = format!("{}{}", T::PREFIX, base);
        Frame {
            ctx: self.ctx,
            name: RoutineName::new(&name).expect("short ascii name"),
            path: format!("{}/{}", self.path, name),
            depth: self.depth + 1,
        }
    }

    pub fn report(&self, st: &InternalState, info: i32, info_array: &[i32]) {
        report_exceptions(st, self.ctx, &self.name, info, info_array);
    }
}

/// A matrix argument that may or may not be writable by the injection hook.
pub(crate) enum ArgMat<'x, 'a, T> {
    Shared(MatrixView<'a, T>),
    Exclusive(&'x mut MatrixViewMut<'a, T>),
}

impl<T: Real + Scalar> ArgMat<'_, '_, T> {
    pub fn view(&self) -> MatrixView<'_, T> {
        match self {
            ArgMat::Shared(v) => *v,
            ArgMat::Exclusive(m) => m.as_view(),
        }
    }
}

/// `check_arg`, preceded by the context's injection hook when the data is writable.
#[allow(clippy::too_many_arguments)]
pub(crate) fn checked<T: Real + Scalar>(
    fr: &Frame<'_>,
    st: &mut InternalState,
    arg: &mut ArgMat<'_, '_, T>,
    legacy: i32,
    info_array: &mut [i32],
    argnum: i32,
    inout: InOut,
    errflag: i32,
    loc: usize,
) {
    if st.what() < 1 {
        return;
    }
    if let (Some(ctx), ArgMat::Exclusive(m)) = (fr.ctx, &mut *arg) {
        let site = CheckSite {
            routine: fr.name.as_str(),
            path: &fr.path,
            depth: fr.depth,
            argnum,
            inout,
            phase: if inout.is_input_phase() { CheckPhase::Input } else { CheckPhase::Output },
            loc,
            m: m.rows(),
            n: m.cols(),
        };
        if let Some(inj) = ctx.on_check_arg(&site) {
            if m.rows() > 0 && m.cols() > 0 {
                let v = match inj.value {
                    InjectValue::Inf => T::infinity(),
                    InjectValue::NaN => <T as Scalar>::nan(),
                };
                m.set(inj.i % m.rows(), inj.j % m.cols(), v);
            }
        }
    }
    check_arg(st, arg.view(), legacy, info_array, argnum, inout, errflag, loc);
}

/// Storage needed for an `m × n` matrix with leading dimension `ld`.
pub(crate) fn extent(m: usize, n: usize, ld: usize) -> usize {
    if m == 0 || n == 0 {
        0
    } else {
        ld * (n - 1) + m
    }
}

/// Header-plus-slots length a report needs, or 0 when `how < 1` (never written).
pub(crate) fn needed_info_len(st: &InternalState, num_args: usize, num_calls: usize) -> usize {
    if st.how() >= 1 {
        6 + num_args + num_calls
    } else {
        0
    }
}

/// Copy of a block, for use as a read-only operand next to a mutable one.
pub(crate) fn copy_block<T: Real + Scalar>(m: MatrixView<'_, T>) -> (Vec<T>, usize, usize) {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        v.extend_from_slice(m.col(j));
    }
    (v, m.rows(), m.cols())
}
