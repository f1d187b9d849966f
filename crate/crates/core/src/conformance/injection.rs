use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::ec::{
    info_array_buffer, CheckPhase, CheckSite, Context, FlagReport, InjectValue, Injection, Report, RoutineName,
};
use crate::lapack::{gesv_ec, GESV_INFO_LEN};

/// Where in the argument to write the poison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// 0-based, reduced modulo the argument's shape.
    At(usize, usize),
    /// Drawn from a seeded generator at injection time.
    Random(u64),
}

/// Which argument check to poison and how.
///
/// Sites are counted in call order among those matching `target_routine`
/// (compared without the precision prefix, `None` = any), `phase` and
/// `max_depth`. The counter is 1-based and lives in the per-run context,
/// so it starts fresh on every [`run_injection`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionPlan {
    pub target_routine: Option<String>,
    pub injection_counter: usize,
    pub phase: Option<CheckPhase>,
    pub value: InjectValue,
    pub position: Position,
    /// `Some(1)` limits injection to the entry routine and its direct children.
    pub max_depth: Option<usize>,
}

impl InjectionPlan {
    /// Poison the `counter`-th matching check anywhere in the tree.
    pub fn nth(counter: usize, value: InjectValue) -> Self {
        InjectionPlan {
            target_routine: None,
            injection_counter: counter,
            phase: None,
            value,
            position: Position::At(0, 0),
            max_depth: None,
        }
    }
}

/// A check site as seen by the hook.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteInfo {
    pub routine: String,
    pub path: String,
    pub depth: usize,
    pub argnum: i32,
    pub input_phase: bool,
    pub m: usize,
    pub n: usize,
}

impl SiteInfo {
    fn from_site(s: &CheckSite<'_>) -> Self {
        SiteInfo {
            routine: s.routine.to_string(),
            path: s.path.to_string(),
            depth: s.depth,
            argnum: s.argnum,
            input_phase: s.phase == CheckPhase::Input,
            m: s.m,
            n: s.n,
        }
    }

    /// Routine names along the path, entry routine first.
    pub fn path_routines(&self) -> Vec<&str> {
        self.path.split('/').collect()
    }
}

/// Context that counts matching checks, poisons one, and keeps every report.
pub struct PoisonContext {
    plan: Option<InjectionPlan>,
    flags: Mutex<FlagReport>,
    seen: Mutex<usize>,
    sites: Mutex<Vec<SiteInfo>>,
    fired: Mutex<Option<SiteInfo>>,
    reports: Mutex<Vec<Report>>,
}

impl PoisonContext {
    pub fn new(plan: Option<InjectionPlan>, flags: FlagReport) -> Self {
        PoisonContext {
            plan,
            flags: Mutex::new(flags),
            seen: Mutex::new(0),
            sites: Mutex::new(Vec::new()),
            fired: Mutex::new(None),
            reports: Mutex::new(Vec::new()),
        }
    }

    fn matches(plan: &InjectionPlan, s: &CheckSite<'_>) -> bool {
        let base = s.routine.get(1..).unwrap_or("");
        plan.target_routine.as_deref().is_none_or(|t| t.eq_ignore_ascii_case(base))
            && plan.phase.is_none_or(|p| p == s.phase)
            && plan.max_depth.is_none_or(|d| s.depth <= d)
    }

    pub fn sites(&self) -> Vec<SiteInfo> {
        self.sites.lock().unwrap().clone()
    }

    pub fn fired(&self) -> Option<SiteInfo> {
        self.fired.lock().unwrap().clone()
    }

    pub fn reports(&self) -> Vec<Report> {
        self.reports.lock().unwrap().clone()
    }
}

impl Context for PoisonContext {
    fn set_flags_to_report(&self, flags: FlagReport) {
        *self.flags.lock().unwrap() = flags;
    }

    fn get_flags_to_report(&self) -> FlagReport {
        *self.flags.lock().unwrap()
    }

    fn report_exceptions(&self, name: &RoutineName, info_array: &[i32]) {
        self.reports.lock().unwrap().push(Report { routine: name.to_string(), info_array: info_array.to_vec() });
    }

    fn on_check_arg(&self, site: &CheckSite<'_>) -> Option<Injection> {
        self.sites.lock().unwrap().push(SiteInfo::from_site(site));
        let plan = self.plan.as_ref()?;
        if self.fired.lock().unwrap().is_some() || !Self::matches(plan, site) {
            return None;
        }
        let mut seen = self.seen.lock().unwrap();
        *seen += 1;
        if *seen != plan.injection_counter {
            return None;
        }
        *self.fired.lock().unwrap() = Some(SiteInfo::from_site(site));
        let (i, j) = match plan.position {
            Position::At(i, j) => (i, j),
            Position::Random(seed) => {
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
                (rng.gen_range(0..site.m.max(1)), rng.gen_range(0..site.n.max(1)))
            }
        };
        Some(Injection { value: plan.value, i, j })
    }
}

/// Everything one injection run produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InjectionOutcome {
    pub info: i32,
    pub info_array: Vec<i32>,
    pub transcript: Vec<Report>,
    /// The poisoned site; `None` means the counter was never reached (a skip).
    pub site: Option<SiteInfo>,
    pub x: Vec<f64>,
}

impl InjectionOutcome {
    pub fn skipped(&self) -> bool {
        self.site.is_none()
    }

    /// Neither INFO nor any report slot mentions the exception.
    pub fn absorbed(&self) -> bool {
        self.info == 0 && self.info_array.iter().skip(6).all(|&c| c <= 0)
    }
}

/// A well-conditioned random system with a fixed seed.
pub fn clean_system(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut a: Vec<f64> = (0..n * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    for i in 0..n {
        a[i + i * n] += n as f64;
    }
    let b = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    (a, b)
}

fn solve_with(ctx: &PoisonContext, n: usize, flags: FlagReport) -> (i32, Vec<i32>, Vec<f64>) {
    let (mut a, mut b) = clean_system(n, 0x5eed ^ n as u64);
    let mut ipiv = vec![0; n];
    let mut ia = info_array_buffer(GESV_INFO_LEN);
    let nn = n as i32;
    let info = gesv_ec(nn, 1, &mut a, nn, &mut ipiv, &mut b, nn, flags, &mut ia, Some(ctx));
    (info, ia, b)
}

/// Every check site the hook sees while solving the clean system.
pub fn enumerate_sites(system_size: usize, flags: FlagReport) -> Vec<SiteInfo> {
    let ctx = PoisonContext::new(None, flags);
    solve_with(&ctx, system_size, flags);
    ctx.sites()
}

/// Solve a clean random `n × n` system with `gesv_ec`, poisoning the check
/// the plan selects, and collect INFO, the report array and every report.
pub fn run_injection(plan: &InjectionPlan, system_size: usize, flags: FlagReport) -> InjectionOutcome {
    let ctx = PoisonContext::new(Some(plan.clone()), flags);
    let (info, info_array, x) = solve_with(&ctx, system_size, flags);
    InjectionOutcome { info, info_array, transcript: ctx.reports(), site: ctx.fired(), x }
}
