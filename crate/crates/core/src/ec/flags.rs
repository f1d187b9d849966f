use serde::{Deserialize, Serialize};

use super::Context;

/// `(what, how)`: scope of checking and reporting channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FlagReport {
    pub what: i32,
    pub how: i32,
}

impl FlagReport {
    pub const LEGACY: FlagReport = FlagReport { what: 0, how: 0 };

    pub const fn new(what: i32, how: i32) -> Self {
        FlagReport { what, how }
    }
}

/// Flags passed to internal calls, indexed by `what + 1`.
pub const WHAT_NEXT: [i32; 4] = [-1, 0, 0, 2];
/// Flags passed to internal calls, indexed by `how` after context resolution.
pub const HOW_NEXT: [i32; 4] = [0, 1, 1, 3];

/// Per-call checking state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InternalState {
    /// Effective `(what, how)` for this routine.
    pub flags_internal: FlagReport,
    /// Flags handed to internal calls.
    pub flags_call: FlagReport,
    pub call_report_exceptions: bool,
    /// First argument exception code (`-argnum` on input, `errflag` on output).
    pub info_internal_args: i32,
    /// Call id of the first internal call that signaled.
    pub info_internal_calls: i32,
}

impl InternalState {
    #[inline]
    pub fn what(&self) -> i32 {
        self.flags_internal.what
    }

    #[inline]
    pub fn how(&self) -> i32 {
        self.flags_internal.how
    }
}

fn clamp_what(w: i32) -> i32 {
    w.clamp(-1, 2)
}

fn call_flags(what: i32, how: i32) -> FlagReport {
    FlagReport::new(WHAT_NEXT[(what + 1) as usize], HOW_NEXT[how as usize])
}

/// Normalize the caller's flags, consulting the context when `how = 4`.
pub fn checkinit1(flags: FlagReport, context: Option<&dyn Context>) -> InternalState {
    let mut what = clamp_what(flags.what);
    let mut how = 0;
    let mut st = InternalState {
        flags_internal: FlagReport::new(what, how),
        flags_call: call_flags(what, how),
        call_report_exceptions: false,
        info_internal_args: 0,
        info_internal_calls: 0,
    };
    if what == -1 {
        return st;
    }
    how = flags.how.clamp(0, 4);
    if how == 4 {
        let f = context.map(|c| c.get_flags_to_report()).unwrap_or_default();
        what = clamp_what(f.what);
        how = if what == -1 { 0 } else { f.how.clamp(0, 3) };
    }
    st.flags_internal = FlagReport::new(what, how);
    st.flags_call = call_flags(what, how);
    st.call_report_exceptions = what != -1 && how >= 2;
    st
}

/// Reset the accumulators and, when `how ≥ 1`, lay out the report header.
///
/// Argument slots already holding 0 or 1 are treated as pre-checked and kept.
/// `info_array` must hold at least `6 + num_args + num_calls` entries when `how ≥ 1`.
pub fn checkinit2(state: &mut InternalState, legacy_info: i32, num_args: usize, num_calls: usize, info_array: &mut [i32]) {
    state.info_internal_args = 0;
    state.info_internal_calls = 0;
    if state.how() < 1 {
        return;
    }
    info_array[0] = legacy_info;
    info_array[1] = state.what();
    info_array[2] = state.how();
    info_array[3] = legacy_info;
    info_array[4] = num_args as i32;
    info_array[5] = num_calls as i32;
    for slot in &mut info_array[6..6 + num_args] {
        if *slot != 0 && *slot != 1 {
            *slot = -1;
        }
    }
    info_array[6 + num_args..6 + num_args + num_calls].fill(-1);
}
