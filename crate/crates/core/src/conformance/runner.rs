use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex;
use serde::Serialize;

use super::case::{CaseInput, Expected, Pat, Routine, TestCase};
use crate::blas1::{iamax_complex, iamax_real, nrm2_complex, nrm2_real, rotg_complex, rotg_real};
use crate::blas23::{ger, trsv, Diag, Trans, Uplo};
use crate::lapack::gesv;
use crate::numeric::{Real, Scalar};
use crate::view::{MatrixView, MatrixViewMut, VectorView, VectorViewMut};

/// The kernels a suite runs. Every method defaults to this crate's
/// implementation; a test double overrides only what it replaces.
pub trait Kernels<T: Real + Scalar> {
    fn iamax_real(&self, v: &[T]) -> usize {
        iamax_real(VectorView::from_slice(v))
    }
    fn iamax_complex(&self, v: &[Complex<T>]) -> usize {
        iamax_complex(VectorView::from_slice(v))
    }
    fn nrm2_real(&self, v: &[T]) -> T {
        nrm2_real(VectorView::from_slice(v))
    }
    fn nrm2_complex(&self, v: &[Complex<T>]) -> T {
        nrm2_complex(VectorView::from_slice(v))
    }
    fn rotg_real(&self, x: T, y: T) -> [T; 4] {
        let g = rotg_real(x, y);
        [g.c, g.s, g.r, g.z]
    }
    fn rotg_complex(&self, x: Complex<T>, y: Complex<T>) -> [T; 5] {
        let g = rotg_complex(x, y);
        [g.c, g.s.re, g.s.im, g.r.re, g.r.im]
    }
    fn trsv(&self, uplo: Uplo, trans: Trans, n: usize, a: &[T], b: &mut [T]) {
        let a = MatrixView::new(a, n, n, n.max(1)).expect("square");
        trsv(uplo, trans, Diag::NonUnit, a, &mut VectorViewMut::from_slice(b)).expect("conforming");
    }
    fn ger(&self, m: usize, n: usize, alpha: T, x: &[T], y: &[T], a: &mut [T]) {
        let mut a = MatrixViewMut::new(a, m, n, m.max(1)).expect("dense");
        ger(alpha, VectorView::from_slice(x), VectorView::from_slice(y), &mut a).expect("conforming");
    }
    fn gesv(&self, n: usize, a: &mut [T], b: &mut [T]) -> i32 {
        let mut ipiv = vec![0; n];
        let nn = n as i32;
        gesv(nn, 1, a, nn.max(1), &mut ipiv, b, nn.max(1))
    }
}

/// This crate's kernels.
#[derive(Debug, Clone, Copy, Default)]
pub struct Library;

impl<T: Real + Scalar> Kernels<T> for Library {}

/// Test double with the classic IAMAX: a running `>` comparison, so a NaN
/// never displaces the current maximum (and one in position 1 is never
/// displaced either). The complex form uses the overflowing `|re| + |im|`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LegacyIamax;

impl<T: Real + Scalar> Kernels<T> for LegacyIamax {
    fn iamax_real(&self, v: &[T]) -> usize {
        legacy_scan(v.iter().map(|x| x.abs()))
    }
    fn iamax_complex(&self, v: &[Complex<T>]) -> usize {
        legacy_scan(v.iter().map(|z| z.re.abs() + z.im.abs()))
    }
}

fn legacy_scan<T: Real>(mut it: impl Iterator<Item = T>) -> usize {
    let Some(mut best) = it.next() else { return 0 };
    let mut idx = 1;
    for (i, x) in it.enumerate() {
        if x > best {
            best = x;
            idx = i + 2;
        }
    }
    idx
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One case's outcome, as emitted in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub expected: String,
    pub got: String,
}

/// Pass/fail/skip counts for one cell of the summary grid.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Result of [`run_suite`]; several results can be merged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub records: Vec<Record>,
    /// `(precision + routine, group) → counts`.
    #[serde(skip)]
    pub grid: BTreeMap<(String, String), Cell>,
}

impl SuiteResult {
    pub fn merge(&mut self, other: SuiteResult) {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self.records.extend(other.records);
        for (k, c) in other.grid {
            let e = self.grid.entry(k).or_default();
            e.passed += c.passed;
            e.failed += c.failed;
            e.skipped += c.skipped;
        }
    }

    /// Routine × group grid: `ok` when every case passed, else `failed/run`.
    pub fn render_grid(&self) -> String {
        let mut groups: Vec<&String> = self.grid.keys().map(|(_, g)| g).collect();
        groups.sort();
        groups.dedup();
        let mut rows: Vec<&String> = self.grid.keys().map(|(r, _)| r).collect();
        rows.dedup();
        let w = rows.iter().map(|r| r.len()).max().unwrap_or(7).max(7);
        let cw = 10;
        let mut s = format!("{:w$}", "routine");
        for g in &groups {
            let _ = write!(s, " {g:>cw$}");
        }
        s.push('\n');
        for r in rows {
            let _ = write!(s, "{r:w$}");
            for g in &groups {
                let cell = match self.grid.get(&(r.clone(), (*g).clone())) {
                    None => "-".to_string(),
                    Some(c) if c.failed == 0 && c.passed == 0 => "skip".to_string(),
                    Some(c) if c.failed == 0 => "ok".to_string(),
                    Some(c) => format!("{}/{}", c.failed, c.failed + c.passed),
                };
                let _ = write!(s, " {cell:>cw$}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "total={} passed={} failed={} skipped={}", self.total, self.passed, self.failed, self.skipped);
        s
    }

    /// JSON array of `{id, status, expected, got}`.
    pub fn records_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("plain data serializes")
    }
}

fn show<T: Real>(x: T) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > T::zero() { "+Inf".into() } else { "-Inf".into() }
    } else {
        format!("{x:e}")
    }
}

fn show_vec<T: Real>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(|&x| show(x)).collect::<Vec<_>>().join(", "))
}

fn within<T: Real>(got: T, want: f64, tol: u64) -> bool {
    let w = T::from_f64_lossy(want);
    got == w || T::ulps_between(got, w) <= tol
}

fn pat_ok<T: Real>(got: T, p: Pat, tol: u64) -> bool {
    match p {
        Pat::Exact(v) => got == T::from_f64_lossy(v),
        Pat::Approx(v) => within(got, v, tol),
        Pat::NaN => got.is_nan(),
        Pat::AnyInf => got.is_infinite(),
    }
}

enum Got<T> {
    Index(usize),
    Value(T),
    Values(Vec<T>),
}

fn execute<T: Real + Scalar, K: Kernels<T> + ?Sized>(k: &K, case: &TestCase<T>) -> Got<T> {
    match (&case.input, case.routine) {
        (CaseInput::Real(v), Routine::IamaxR) => Got::Index(k.iamax_real(v)),
        (CaseInput::Complex(v), Routine::IamaxC) => Got::Index(k.iamax_complex(v)),
        (CaseInput::Real(v), Routine::Nrm2R) => Got::Value(k.nrm2_real(v)),
        (CaseInput::Complex(v), Routine::Nrm2C) => Got::Value(k.nrm2_complex(v)),
        (CaseInput::RealPair(x, y), Routine::RotgR) => Got::Values(k.rotg_real(*x, *y).to_vec()),
        (CaseInput::ComplexPair(x, y), Routine::RotgC) => Got::Values(k.rotg_complex(*x, *y).to_vec()),
        (CaseInput::Trsv { uplo, trans, n, a, b }, Routine::Trsv) => {
            let mut x = b.clone();
            k.trsv(*uplo, *trans, *n, a, &mut x);
            Got::Values(x)
        }
        (CaseInput::Ger { m, n, alpha, x, y, a }, Routine::Ger) => {
            let mut out = a.clone();
            k.ger(*m, *n, *alpha, x, y, &mut out);
            Got::Values(out)
        }
        (CaseInput::Gesv { n, a, b }, Routine::Gesv) => {
            let mut a = a.clone();
            let mut x = b.clone();
            k.gesv(*n, &mut a, &mut x);
            Got::Values(x)
        }
        _ => panic!("case {} pairs routine {} with the wrong input kind", case.id, case.routine),
    }
}

fn judge<T: Real>(expected: &Expected, got: &Got<T>, tol: u64) -> (bool, String) {
    match (expected, got) {
        (Expected::Index(i), Got::Index(g)) => (i == g, format!("index {g}")),
        (Expected::Value(v), Got::Value(g)) => (within(*g, *v, tol), show(*g)),
        (Expected::NaN, Got::Value(g)) => (g.is_nan(), show(*g)),
        (Expected::PosInf, Got::Value(g)) => (g.is_infinite() && *g > T::zero(), show(*g)),
        (Expected::Exceptional, Got::Values(v)) => (v.iter().any(|x| !x.is_finite()), show_vec(v)),
        (Expected::Pattern(p), Got::Values(v)) => {
            (p.len() == v.len() && p.iter().zip(v).all(|(p, &g)| pat_ok(g, *p, tol)), show_vec(v))
        }
        (_, Got::Index(g)) => (false, format!("index {g}")),
        (_, Got::Value(g)) => (false, show(*g)),
        (_, Got::Values(v)) => (false, show_vec(v)),
    }
}

/// Run `cases` against this crate's kernels.
pub fn run_suite<T: Real + Scalar>(cases: &[TestCase<T>], tolerance_ulps: u64) -> SuiteResult {
    run_suite_with(&Library, cases, tolerance_ulps)
}

/// Run `cases` against any [`Kernels`] implementation. Index expectations
/// are exact, values within `tolerance_ulps`, classifications by predicate.
pub fn run_suite_with<T: Real + Scalar, K: Kernels<T> + ?Sized>(
    kernels: &K,
    cases: &[TestCase<T>],
    tolerance_ulps: u64,
) -> SuiteResult {
    let mut r = SuiteResult::default();
    for case in cases {
        r.total += 1;
        let key = (format!("{}:{}", T::PREFIX, case.routine.name()), case.group.clone());
        let cell = r.grid.entry(key).or_default();
        let expected = case.expected.to_string();
        if let Some(why) = &case.skip {
            r.skipped += 1;
            cell.skipped += 1;
            r.records.push(Record { id: case.id.clone(), status: Status::Skip, expected, got: why.clone() });
            continue;
        }
        let got = execute(kernels, case);
        let (ok, shown) = judge(&case.expected, &got, tolerance_ulps);
        if ok {
            r.passed += 1;
            cell.passed += 1;
        } else {
            r.failed += 1;
            cell.failed += 1;
            r.failures.push(Failure { id: case.id.clone(), expected: expected.clone(), got: shown.clone() });
        }
        r.records.push(Record {
            id: case.id.clone(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected,
            got: shown,
        });
    }
    r
}
