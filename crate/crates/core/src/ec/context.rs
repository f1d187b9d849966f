use std::fmt;
use std::io::Write;
use std::sync::Mutex;

use serde::Serialize;

use super::{FlagReport, InOut};

/// Longest routine name a report may carry.
pub const NAME_CAPACITY: usize = 63;

/// Routine name stored as a fixed character array plus explicit length.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RoutineName {
    buf: [u8; NAME_CAPACITY],
    len: u8,
}

impl RoutineName {
    /// `None` if `name` is longer than [`NAME_CAPACITY`] bytes or not ASCII.
    pub fn new(name: &str) -> Option<Self> {
        if name.len() > NAME_CAPACITY || !name.is_ascii() {
            return None;
        }
        let mut buf = [b' '; NAME_CAPACITY];
        buf[..name.len()].copy_from_slice(name.as_bytes());
        Some(RoutineName { buf, len: name.len() as u8 })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn chars(&self) -> &[u8] {
        &self.buf[..self.len()]
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(self.chars()).expect("ascii by construction")
    }
}

impl fmt::Debug for RoutineName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RoutineName({:?})", self.as_str())
    }
}

impl fmt::Display for RoutineName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckPhase {
    Input,
    Output,
}

/// Where a checked argument scan is about to happen; handed to the injection hook.
#[derive(Debug, Clone)]
pub struct CheckSite<'a> {
    pub routine: &'a str,
    /// Call path from the entry routine, `/`-separated.
    pub path: &'a str,
    /// 0 for the routine the user called.
    pub depth: usize,
    pub argnum: i32,
    pub inout: InOut,
    pub phase: CheckPhase,
    pub loc: usize,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
pub enum InjectValue {
    Inf,
    NaN,
}

/// Overwrite entry `(i, j)` (0-based, reduced modulo the argument's shape).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Injection {
    pub value: InjectValue,
    pub i: usize,
    pub j: usize,
}

/// Caller-owned reporting environment.
///
/// Implementations must be safe to share across threads; distinct
/// contexts never interfere.
pub trait Context: Send + Sync {
    fn set_flags_to_report(&self, flags: FlagReport);
    fn get_flags_to_report(&self) -> FlagReport;
    fn report_exceptions(&self, name: &RoutineName, info_array: &[i32]);

    /// Fault-injection hook, consulted before every argument scan whose
    /// data is writable. The default never injects.
    fn on_check_arg(&self, _site: &CheckSite<'_>) -> Option<Injection> {
        None
    }
}

type Handler = Box<dyn Fn(&RoutineName, &[i32]) + Send + Sync>;

/// Flag store with an optional report handler.
#[derive(Default)]
pub struct FlagContext {
    flags: Mutex<FlagReport>,
    handler: Option<Handler>,
}

impl FlagContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_handler(handler: impl Fn(&RoutineName, &[i32]) + Send + Sync + 'static) -> Self {
        FlagContext { flags: Mutex::default(), handler: Some(Box::new(handler)) }
    }
}

impl Context for FlagContext {
    fn set_flags_to_report(&self, flags: FlagReport) {
        *self.flags.lock().unwrap() = flags;
    }

    fn get_flags_to_report(&self) -> FlagReport {
        *self.flags.lock().unwrap()
    }

    fn report_exceptions(&self, name: &RoutineName, info_array: &[i32]) {
        if let Some(h) = &self.handler {
            h(name, info_array);
        }
    }
}

/// Writes one line per report to a sink and always continues.
///
/// Its flag query always answers `(4, 3)`, which normalizes to `(2, 3)`.
pub struct VerboseContext {
    sink: Mutex<Box<dyn Write + Send>>,
}

impl VerboseContext {
    pub fn new(sink: Box<dyn Write + Send>) -> Self {
        VerboseContext { sink: Mutex::new(sink) }
    }

    pub fn stderr() -> Self {
        Self::new(Box::new(std::io::stderr()))
    }

    pub fn render(name: &RoutineName, info_array: &[i32]) -> String {
        let vals: Vec<String> = info_array.iter().map(i32::to_string).collect();
        format!("EXC {} info_array=[{}]", name, vals.join(","))
    }
}

impl Context for VerboseContext {
    fn set_flags_to_report(&self, _flags: FlagReport) {}

    fn get_flags_to_report(&self) -> FlagReport {
        FlagReport::new(4, 3)
    }

    fn report_exceptions(&self, name: &RoutineName, info_array: &[i32]) {
        let mut s = self.sink.lock().unwrap();
        // a failing sink must not stop the computation
        let _ = writeln!(s, "{}", Self::render(name, info_array));
        let _ = s.flush();
    }
}

/// Ignores everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct TerseContext;

impl Context for TerseContext {
    fn set_flags_to_report(&self, _flags: FlagReport) {}

    fn get_flags_to_report(&self) -> FlagReport {
        FlagReport::default()
    }

    fn report_exceptions(&self, _name: &RoutineName, _info_array: &[i32]) {}
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub routine: String,
    pub info_array: Vec<i32>,
}

/// Flag store that keeps every report, in order.
#[derive(Debug, Default)]
pub struct RecordingContext {
    flags: Mutex<FlagReport>,
    reports: Mutex<Vec<Report>>,
}

impl RecordingContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reports(&self) -> Vec<Report> {
        self.reports.lock().unwrap().clone()
    }

    pub fn take_reports(&self) -> Vec<Report> {
        std::mem::take(&mut *self.reports.lock().unwrap())
    }
}

impl Context for RecordingContext {
    fn set_flags_to_report(&self, flags: FlagReport) {
        *self.flags.lock().unwrap() = flags;
    }

    fn get_flags_to_report(&self) -> FlagReport {
        *self.flags.lock().unwrap()
    }

    fn report_exceptions(&self, name: &RoutineName, info_array: &[i32]) {
        self.reports.lock().unwrap().push(Report { routine: name.to_string(), info_array: info_array.to_vec() });
    }
}
