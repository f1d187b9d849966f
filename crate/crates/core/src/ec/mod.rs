//! Exception-checking protocol: flag normalization, argument scanning,
//! internal-call aggregation, INFO synthesis and report dispatch.

mod check;
mod context;
mod flags;
mod info;

pub use check::{check_arg, check_call, report_exceptions, scan_inf_nan, update_info, InOut};
pub use context::{
    CheckPhase, CheckSite, Context, FlagContext, InjectValue, Injection, RecordingContext, Report,
    RoutineName, TerseContext, VerboseContext, NAME_CAPACITY,
};
pub use flags::{checkinit1, checkinit2, FlagReport, InternalState, HOW_NEXT, WHAT_NEXT};
pub use info::{describe_arg_code, describe_call_code, info_array_buffer, InfoArray, InfoArrayError};
