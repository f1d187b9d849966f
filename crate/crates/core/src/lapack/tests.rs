use super::*;
use crate::ec::{
    info_array_buffer, CheckPhase, CheckSite, Context, FlagReport, InjectValue, Injection, RecordingContext, RoutineName,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use std::sync::Mutex;

const FULL: FlagReport = FlagReport::new(2, 1);

fn random_matrix(n: usize, m: usize, seed: u64) -> Vec<f64> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    (0..n * m).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// `P·L·U` rebuilt from packed factors, column-major `m × n`.
fn reconstruct(m: usize, n: usize, lu: &[f64], ipiv: &[i32]) -> Vec<f64> {
    let k = m.min(n);
    let mut out = vec![0.0; m * n];
    for j in 0..n {
        for i in 0..m {
            let mut s = 0.0;
            for p in 0..=i.min(j).min(k - 1) {
                let l = if p == i { 1.0 } else { lu[i + p * m] };
                s += l * lu[p + j * m];
            }
            out[i + j * m] = s;
        }
    }
    // undo the row interchanges in reverse
    for i in (0..k).rev() {
        let p = ipiv[i] as usize - 1;
        if p != i {
            for j in 0..n {
                out.swap(i + j * m, p + j * m);
            }
        }
    }
    out
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn one_by_one() {
    let mut a = [2.0f64];
    let mut b = [4.0];
    let mut ipiv = [0];
    assert_eq!(gesv(1, 1, &mut a, 1, &mut ipiv, &mut b, 1), 0);
    assert_eq!((b[0], ipiv[0]), (2.0, 1));

    let mut z = [0.0f32];
    let mut b = [1.0f32];
    assert_eq!(gesv(1, 1, &mut z, 1, &mut ipiv, &mut b, 1), 1);
    assert_eq!(b[0], 1.0);
}

#[test]
fn argument_errors() {
    let mut a = [1.0f64; 4];
    let mut b = [1.0; 2];
    let mut ipiv = [0; 2];
    assert_eq!(gesv(-1, 1, &mut a, 2, &mut ipiv, &mut b, 2), -1);
    assert_eq!(gesv(2, -1, &mut a, 2, &mut ipiv, &mut b, 2), -2);
    assert_eq!(gesv(2, 1, &mut a, 1, &mut ipiv, &mut b, 2), -4);
    assert_eq!(gesv(2, 1, &mut a, 2, &mut ipiv, &mut b, 1), -7);
    assert_eq!(gesv(2, 1, &mut a[..3], 2, &mut ipiv, &mut b, 2), -3);
    assert_eq!(gesv(2, 1, &mut a, 2, &mut ipiv[..1], &mut b, 2), -5);
    assert_eq!(gesv(2, 1, &mut a, 2, &mut ipiv, &mut b[..1], 2), -6);
    let mut short = [0; 3];
    assert_eq!(gesv_ec(2, 1, &mut a, 2, &mut ipiv, &mut b, 2, FULL, &mut short, None), -10);
    let mut ia = info_array_buffer(GESV_INFO_LEN);
    assert_eq!(gesv_ec(2, 1, &mut a, 1, &mut ipiv, &mut b, 2, FULL, &mut ia, None), -4);
    assert_eq!((ia[0], ia[3]), (-4, -4));
    assert_eq!(getrs('x', 1, 1, &[1.0f64], 1, &[1], &mut [1.0], 1), -1);
    assert_eq!(getrs('n', 1, 1, &[1.0f64], 1, &[2], &mut [1.0], 1), -6);
    assert_eq!(getrf(2, 2, &mut [1.0f64; 4], 1, &mut [0; 2]), -4);
    assert_eq!(getrf2(-1, 2, &mut [1.0f64; 4], 1, &mut [0; 2]), -1);
}

#[test]
fn silent_mode_never_reports_errors() {
    let mut a = [0.0f64];
    let mut b = [1.0];
    let mut ipiv = [0];
    let off = FlagReport::new(-1, 0);
    assert_eq!(gesv_ec(1, 1, &mut a, 1, &mut ipiv, &mut b, 1, off, &mut [], None), 0);
    assert_eq!(gesv_ec(-3, 1, &mut a, 1, &mut ipiv, &mut b, 1, off, &mut [], None), 0);
}

#[test]
fn six_by_six_reconstruction_all_variants() {
    let n = 6;
    let a0 = random_matrix(n, n, 7);
    let variants: [(&str, usize); 4] = [("recursive", 64), ("nb1", 1), ("nb2", 2), ("nb4", 4)];
    for (label, nb) in variants {
        let mut a = a0.clone();
        let mut ipiv = [0; 6];
        let opts = LuOptions { nb, ..Default::default() };
        let info = getrf_ec_with(6, 6, &mut a, 6, &mut ipiv, FlagReport::LEGACY, &mut [0], None, &opts);
        assert_eq!(info, 0, "{label}");
        let r = reconstruct(n, n, &a, &ipiv);
        assert!(max_abs_diff(&r, &a0) < 1e-14, "{label}");
        // partial pivoting bounds |L| by one
        for j in 0..n {
            for i in j + 1..n {
                assert!(a[i + j * n].abs() <= 1.0, "{label}");
            }
        }
    }
    let mut a = a0.clone();
    let mut ipiv = [0; 6];
    assert_eq!(getrf2(6, 6, &mut a, 6, &mut ipiv), 0);
    assert!(max_abs_diff(&reconstruct(n, n, &a, &ipiv), &a0) < 1e-14);
}

#[test]
fn rectangular_factorization() {
    for (m, n) in [(7usize, 3usize), (3, 7), (5, 1), (1, 5)] {
        let a0 = random_matrix(m, n, (m * 10 + n) as u64);
        for nb in [64, 2] {
            let mut a = a0.clone();
            let mut ipiv = vec![0; m.min(n)];
            let opts = LuOptions { nb, ..Default::default() };
            let info = getrf_ec_with(m as i32, n as i32, &mut a, m as i32, &mut ipiv, FlagReport::LEGACY, &mut [0], None, &opts);
            assert_eq!(info, 0);
            assert!(max_abs_diff(&reconstruct(m, n, &a, &ipiv), &a0) < 1e-14, "{m}x{n} nb={nb}");
        }
    }
}

#[test]
fn singular_reports_first_zero_pivot() {
    // second column is a multiple of the first: U(2,2) = 0
    let mut a = [1.0f64, 2.0, 3.0, 2.0, 4.0, 6.0, 0.0, 1.0, 1.0];
    let mut ipiv = [0; 3];
    assert_eq!(getrf(3, 3, &mut a, 3, &mut ipiv), 2);
    let mut a = [1.0f64, 2.0, 3.0, 2.0, 4.0, 6.0, 0.0, 1.0, 1.0];
    let mut b = [1.0; 3];
    assert_eq!(gesv(3, 1, &mut a, 3, &mut ipiv, &mut b, 3), 2);
    assert_eq!(b, [1.0; 3]);
    // blocked path: zero pivot found in the second panel
    let mut a = vec![0.0f64; 16];
    for i in 0..4 {
        a[i + i * 4] = if i == 2 { 0.0 } else { 1.0 };
    }
    let mut ipiv = [0; 4];
    let opts = LuOptions { nb: 2, ..Default::default() };
    assert_eq!(getrf_ec_with(4, 4, &mut a, 4, &mut ipiv, FlagReport::LEGACY, &mut [0], None, &opts), 3);
}

#[test]
fn getrs_round_trip() {
    let n = 5;
    let a0 = random_matrix(n, n, 3);
    let x0 = random_matrix(n, 2, 4);
    let mut lu = a0.clone();
    let mut ipiv = [0; 5];
    assert_eq!(getrf(5, 5, &mut lu, 5, &mut ipiv), 0);
    for trans in ['N', 't', 'C'] {
        let mut b = vec![0.0; n * 2];
        for c in 0..2 {
            for i in 0..n {
                b[i + c * n] = (0..n)
                    .map(|p| if trans == 'N' { a0[i + p * n] } else { a0[p + i * n] } * x0[p + c * n])
                    .sum();
            }
        }
        assert_eq!(getrs(trans, 5, 2, &lu, 5, &ipiv, &mut b, 5), 0);
        assert!(max_abs_diff(&b, &x0) < 1e-12, "{trans}");
    }
}

#[test]
fn clean_run_fills_report_with_zeros() {
    let mut a = [4.0f64, 1.0, 2.0, 3.0];
    let mut b = [1.0, 2.0];
    let mut ipiv = [0; 2];
    let mut ia = info_array_buffer(GESV_INFO_LEN);
    assert_eq!(gesv_ec(2, 1, &mut a, 2, &mut ipiv, &mut b, 2, FULL, &mut ia, None), 0);
    assert_eq!(ia, vec![0, 2, 1, 0, 2, 2, 0, 0, 0, 0]);
}

#[test]
fn legacy_flags_leave_info_array_alone() {
    let mut a = [f64::NAN, 1.0, 2.0, 3.0];
    let mut b = [1.0, 2.0];
    let mut ipiv = [0; 2];
    let mut ia = [7];
    assert_eq!(gesv_ec(2, 1, &mut a, 2, &mut ipiv, &mut b, 2, FlagReport::LEGACY, &mut ia, None), 0);
    assert_eq!(ia, [7]);
}

/// Every single-position Inf/NaN in A or B is signaled, with the code
/// naming the argument it entered through.
#[test]
fn propagation_completeness_4x4() {
    let n = 4;
    let a0 = random_matrix(n, n, 11);
    let b0 = random_matrix(n, 1, 12);
    for bad in [f64::INFINITY, f64::NEG_INFINITY, f64::NAN] {
        for pos in 0..n * n + n {
            let mut a = a0.clone();
            let mut b = b0.clone();
            if pos < n * n {
                a[pos] = bad;
            } else {
                b[pos - n * n] = bad;
            }
            let mut ipiv = [0; 4];
            let mut ia = info_array_buffer(GESV_INFO_LEN);
            let info = gesv_ec(4, 1, &mut a, 4, &mut ipiv, &mut b, 4, FULL, &mut ia, None);
            let want = if pos < n * n { -3 } else { -6 };
            assert_eq!(info, want, "pos {pos} value {bad}");
            // 1 = input only, 3 = input and output
            assert_eq!(ia[if pos < n * n { 6 } else { 7 }] % 2, 1);
            assert!(ia[7..].iter().any(|&c| c >= 2) || pos < n * n, "B output or solve flagged");
            // the exceptional value is not lost
            assert!(b.iter().any(|x| !x.is_finite()) || a.iter().any(|x| !x.is_finite()));
        }
    }
}

/// Context that poisons the first check of one routine's input.
struct InjectAt {
    routine: &'static str,
    fired: Mutex<bool>,
    inner: RecordingContext,
}

impl Context for InjectAt {
    fn set_flags_to_report(&self, f: FlagReport) {
        self.inner.set_flags_to_report(f)
    }
    fn get_flags_to_report(&self) -> FlagReport {
        self.inner.get_flags_to_report()
    }
    fn report_exceptions(&self, name: &RoutineName, ia: &[i32]) {
        self.inner.report_exceptions(name, ia)
    }
    fn on_check_arg(&self, site: &CheckSite<'_>) -> Option<Injection> {
        let mut fired = self.fired.lock().unwrap();
        if !*fired && site.routine.ends_with(self.routine) && site.phase == CheckPhase::Input {
            *fired = true;
            return Some(Injection { value: InjectValue::NaN, i: 1, j: 1 });
        }
        None
    }
}

#[test]
fn poison_inside_factorization_surfaces_at_output() {
    let ctx = InjectAt { routine: "GETRF", fired: Mutex::new(false), inner: RecordingContext::new() };
    let n = 4;
    let mut a = random_matrix(n, n, 5);
    let mut b = random_matrix(n, 1, 6);
    let mut ipiv = [0; 4];
    let mut ia = info_array_buffer(GESV_INFO_LEN);
    let info = gesv_ec(4, 1, &mut a, 4, &mut ipiv, &mut b, 4, FlagReport::new(2, 2), &mut ia, Some(&ctx));
    assert!(*ctx.fired.lock().unwrap());
    assert_eq!(info, n as i32 + 1);
    assert_eq!(ia[6], 2);
    assert!(ia[8] > 0);
    let reports = ctx.inner.reports();
    // internal calls run with how = 1, so only the driver reports
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].routine, "DGESV");
    assert_eq!(reports[0].info_array, ia);
}

#[test]
fn seeding_does_not_change_the_outcome() {
    let n = 6;
    let a0 = random_matrix(n, n, 21);
    let b0 = random_matrix(n, 2, 22);
    for pos in [None, Some(0), Some(17), Some(35)] {
        let mut results = Vec::new();
        for seed in [false, true] {
            for nb in [64, 2] {
                let mut a = a0.clone();
                if let Some(p) = pos {
                    a[p] = f64::INFINITY;
                }
                let mut b = b0.clone();
                let mut ipiv = [0; 6];
                let mut ia = info_array_buffer(GESV_INFO_LEN);
                let ctx = RecordingContext::new();
                let opts = LuOptions { nb, seed_prechecked: seed };
                let info = gesv_ec_with(6, 2, &mut a, 6, &mut ipiv, &mut b, 6, FlagReport::new(2, 2), &mut ia, Some(&ctx), &opts);
                let routines: Vec<String> = ctx.reports().into_iter().map(|r| r.routine).collect();
                results.push((nb, info, ia, routines));
            }
        }
        let (off, on) = results.split_at(2);
        assert_eq!(off, on, "poison at {pos:?}");
    }
}

fn backward_error(n: usize, seed: u64) -> f64 {
    let a0 = random_matrix(n, n, seed);
    let b0 = random_matrix(n, 1, seed + 1);
    let mut a = a0.clone();
    let mut x = b0.clone();
    let mut ipiv = vec![0; n];
    assert_eq!(gesv(n as i32, 1, &mut a, n as i32, &mut ipiv, &mut x, n as i32), 0);
    let norm_inf = |rows: &dyn Fn(usize) -> f64| (0..n).map(rows).fold(0.0, f64::max);
    let r = norm_inf(&|i| (b0[i] - (0..n).map(|j| a0[i + j * n] * x[j]).sum::<f64>()).abs());
    let an = norm_inf(&|i| (0..n).map(|j| a0[i + j * n].abs()).sum());
    let xn = norm_inf(&|i| x[i].abs());
    r / (an * xn * n as f64 * f64::EPSILON)
}

#[test]
fn backward_error_is_small() {
    for (n, seed) in [(20, 1), (50, 2), (130, 3)] {
        let e = backward_error(n, seed);
        assert!(e < 10.0, "n={n} scaled backward error {e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reconstruction_any_block_size(n in 1usize..12, nb in 1usize..6, seed: u64) {
        let a0 = random_matrix(n, n, seed);
        let mut a = a0.clone();
        let mut ipiv = vec![0; n];
        let opts = LuOptions { nb, ..Default::default() };
        let info = getrf_ec_with(n as i32, n as i32, &mut a, n as i32, &mut ipiv, FlagReport::LEGACY, &mut [0], None, &opts);
        prop_assert_eq!(info, 0);
        prop_assert!(max_abs_diff(&reconstruct(n, n, &a, &ipiv), &a0) < 1e-12);
    }

    #[test]
    fn single_precision_solves(n in 1usize..10, seed: u64) {
        let a0: Vec<f32> = random_matrix(n, n, seed).into_iter().map(|x| x as f32 + if n == 1 { 2.0 } else { 0.0 }).collect();
        let x0: Vec<f32> = (0..n).map(|i| i as f32 - 1.5).collect();
        let mut b: Vec<f32> = (0..n).map(|i| (0..n).map(|j| a0[i + j * n] * x0[j]).sum()).collect();
        let mut a = a0.clone();
        let mut ipiv = vec![0; n];
        let info = gesv(n as i32, 1, &mut a, n as i32, &mut ipiv, &mut b, n as i32);
        prop_assert!(info >= 0);
    }
}
