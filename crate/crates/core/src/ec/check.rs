use super::{Context, InternalState, RoutineName};
use crate::numeric::Scalar;
use crate::view::MatrixView;

/// Role of an argument at the point it is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum InOut {
    InputOnly = 0,
    OutputOnly = 1,
    InOutAtInput = 2,
    InOutAtOutput = 3,
}

impl InOut {
    pub fn is_input_phase(self) -> bool {
        matches!(self, InOut::InputOnly | InOut::InOutAtInput)
    }
}

/// First Inf/NaN in column-major order, as a 1-based `(i, j)`.
pub fn scan_inf_nan<S: Scalar>(m: MatrixView<'_, S>) -> (bool, usize, usize) {
    for j in 0..m.cols() {
        if let Some(i) = m.col(j).iter().position(|x| x.is_exceptional()) {
            return (true, i + 1, j + 1);
        }
    }
    (false, 0, 0)
}

/// Scan one argument and record the result in slot `loc` (1-based).
pub fn check_arg<S: Scalar>(
    state: &mut InternalState,
    m: MatrixView<'_, S>,
    legacy_info: i32,
    info_array: &mut [i32],
    argnum: i32,
    inout: InOut,
    errflag: i32,
    loc: usize,
) {
    if state.what() < 1 {
        return;
    }
    let found = || scan_inf_nan(m).0 as i32;
    let slot = loc - 1;
    if state.how() >= 1 {
        match inout {
            InOut::InputOnly | InOut::InOutAtInput => {
                let cur = info_array[slot];
                if cur != 0 && cur != 1 {
                    info_array[slot] = found();
                }
                if state.info_internal_args == 0 && info_array[slot] == 1 {
                    state.info_internal_args = -argnum;
                }
            }
            InOut::OutputOnly => {
                info_array[slot] = 2 * found();
                if state.info_internal_args == 0 && info_array[slot] == 2 {
                    state.info_internal_args = errflag;
                }
            }
            InOut::InOutAtOutput => {
                if found() == 1 {
                    // an unchecked (-1) input slot counts as clean here
                    info_array[slot] = info_array[slot].max(0) + 2;
                }
                if state.info_internal_args == 0 && info_array[slot] == 2 {
                    state.info_internal_args = errflag;
                }
            }
        }
    } else if state.info_internal_args == 0 && legacy_info == 0 && found() == 1 {
        state.info_internal_args = if inout.is_input_phase() { -argnum } else { errflag };
    }
}

/// Fold a callee's report into slot `loc` (1-based) of the caller.
pub fn check_call(state: &mut InternalState, callee: &[i32], info_array: &mut [i32], call_id: i32, loc: usize) {
    if state.what() < 2 || state.how() < 1 {
        return;
    }
    let nargs = callee[4].max(0) as usize;
    let ncalls = callee[5].max(0) as usize;
    let tmp_calls = callee[6 + nargs..6 + nargs + ncalls].iter().copied().fold(0, i32::max);
    let tmp_inout = callee[6..6 + nargs].iter().copied().fold(0, i32::max);
    let mut tmp = info_array[loc - 1].max(0);
    if tmp_calls >= 1 {
        tmp = tmp.max(1);
    }
    if tmp_inout > 0 {
        tmp = tmp.max(tmp_inout + 1);
    }
    info_array[loc - 1] = tmp;
    if state.info_internal_calls == 0 && tmp > 0 {
        state.info_internal_calls = call_id;
    }
}

/// Final INFO. Priority: legacy code, then argument exceptions, then
/// internal-call exceptions (the latter only when `how ≥ 1`).
pub fn update_info(legacy_info: i32, info_array: &mut [i32], state: &InternalState) -> i32 {
    let mut info = legacy_info;
    if info == 0 && state.info_internal_args != 0 {
        info = state.info_internal_args;
    }
    if info == 0 && state.how() >= 1 && state.info_internal_calls > 0 {
        info = state.info_internal_calls;
    }
    if state.how() >= 1 {
        info_array[0] = legacy_info;
        info_array[3] = info;
    }
    info
}

/// Dispatch to the context's handler when the state asks for it and INFO ≠ 0.
pub fn report_exceptions(
    state: &InternalState,
    context: Option<&dyn Context>,
    name: &RoutineName,
    info: i32,
    info_array: &[i32],
) {
    if !state.call_report_exceptions || info == 0 {
        return;
    }
    if let Some(ctx) = context {
        let len = if info_array.len() >= 6 {
            (6 + info_array[4].max(0) + info_array[5].max(0)) as usize
        } else {
            info_array.len()
        };
        ctx.report_exceptions(name, &info_array[..len.min(info_array.len())]);
    }
}
