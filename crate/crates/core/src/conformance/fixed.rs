use num_complex::Complex;

use super::case::{CaseInput, Expected, Pat, Routine, TestCase};
use crate::blas23::{Trans, Uplo};
use crate::numeric::Real;

fn case<T: Real>(routine: Routine, group: &str, label: &str, n: usize, input: CaseInput<T>, expected: Expected) -> TestCase<T> {
    TestCase {
        id: format!("{}/{}/{group}/{label}", T::PREFIX, routine.name()),
        routine,
        group: group.to_string(),
        n,
        input,
        expected,
        skip: None,
    }
}

/// Rows of the real and complex Givens exceptional tables, plus a few
/// finite rows. Real outputs are `[c, s, r, z]`; complex are
/// `[c, s.re, s.im, r.re, r.im]`.
pub fn gen_rotg_cases<T: Real>() -> Vec<TestCase<T>> {
    use Pat::{AnyInf, Approx, Exact, NaN};
    let f = |x: f64| T::from_f64_lossy(x);
    let inf = f64::INFINITY;
    let nan = f64::NAN;
    let mut out = Vec::new();
    let mut real = |label: &str, x: f64, y: f64, pat: Vec<Pat>, group: &str| {
        out.push(case(Routine::RotgR, group, label, 2, CaseInput::RealPair(f(x), f(y)), Expected::Pattern(pat)));
    };
    real("inf,finite", inf, 5.0, vec![Exact(1.0), Exact(0.0), Exact(inf), Exact(0.0)], "table");
    real("-inf,finite", -inf, -2.0, vec![Exact(1.0), Exact(0.0), Exact(-inf), Exact(0.0)], "table");
    real("finite,inf", 3.0, inf, vec![Exact(0.0), Exact(1.0), Exact(inf), Exact(1.0)], "table");
    real("finite,-inf", 3.0, -inf, vec![Exact(0.0), Exact(1.0), Exact(-inf), Exact(1.0)], "table");
    real("inf,inf", inf, -inf, vec![NaN, NaN, AnyInf, NaN], "table");
    real("-inf,-inf", -inf, -inf, vec![NaN, NaN, AnyInf, NaN], "table");
    real("nan,finite", nan, 1.0, vec![NaN, NaN, NaN, NaN], "table");
    real("finite,nan", 1.0, nan, vec![NaN, NaN, NaN, NaN], "table");
    real("inf,nan", inf, nan, vec![NaN, NaN, NaN, NaN], "table");
    real("3,4", 3.0, 4.0, vec![Approx(0.6), Approx(0.8), Approx(5.0), Approx(1.0 / 0.6)], "finite");
    real("-4,3", -4.0, 3.0, vec![Approx(0.8), Approx(-0.6), Approx(-5.0), Approx(-0.6)], "finite");
    real("0,0", 0.0, 0.0, vec![Exact(1.0), Exact(0.0), Exact(0.0), Exact(0.0)], "finite");
    real("0,-2", 0.0, -2.0, vec![Exact(0.0), Exact(1.0), Exact(-2.0), Exact(1.0)], "finite");

    let c = |re: f64, im: f64| Complex::new(f(re), f(im));
    let mut cplx = |label: &str, x: Complex<T>, y: Complex<T>, pat: Vec<Pat>, group: &str| {
        out.push(case(Routine::RotgC, group, label, 2, CaseInput::ComplexPair(x, y), Expected::Pattern(pat)));
    };
    cplx("nan", c(nan, 0.0), c(1.0, 1.0), vec![NaN, NaN, NaN, NaN, NaN], "table");
    cplx("inf,inf", c(inf, 0.0), c(0.0, -inf), vec![NaN, NaN, NaN, Exact(inf), Exact(0.0)], "table");
    cplx("inf,finite", c(-inf, 2.0), c(1.0, 1.0), vec![Exact(1.0), Exact(0.0), Exact(0.0), Exact(-inf), Exact(2.0)], "table");
    cplx("finite,re-inf", c(1.0, 1.0), c(-inf, 2.0), vec![Exact(0.0), Exact(-1.0), Exact(0.0), Exact(inf), Exact(0.0)], "table");
    cplx("finite,im-inf", c(1.0, 1.0), c(2.0, inf), vec![Exact(0.0), Exact(0.0), Exact(-1.0), Exact(inf), Exact(0.0)], "table");
    cplx("finite,both-inf", c(1.0, 1.0), c(inf, inf), vec![Exact(0.0), NaN, NaN, Exact(inf), Exact(0.0)], "table");
    cplx("3i,4", c(0.0, 3.0), c(4.0, 0.0), vec![Approx(0.6), Approx(0.0), Approx(0.8), Approx(0.0), Approx(5.0)], "finite");
    cplx("0,y", c(0.0, 0.0), c(0.0, 2.0), vec![Exact(0.0), Exact(0.0), Exact(-1.0), Exact(2.0), Exact(0.0)], "finite");
    cplx("x,0", c(1.0, -1.0), c(0.0, 0.0), vec![Exact(1.0), Exact(0.0), Exact(0.0), Exact(1.0), Exact(-1.0)], "finite");
    out
}

/// Triangular-solve, rank-1 update and 2×2 solve examples in which a
/// zero-skipping implementation drops a NaN. Each expects a NaN or Inf
/// somewhere in the output.
pub fn gen_regression_cases<T: Real>() -> Vec<TestCase<T>> {
    let v = |xs: &[f64]| xs.iter().map(|&x| T::from_f64_lossy(x)).collect::<Vec<T>>();
    let nan = f64::NAN;
    vec![
        // U = [1 NaN; 0 NaN], b = [1; 0]; trailing zero in b must not skip column 2
        case(
            Routine::Trsv,
            "regression",
            "upper-2x2",
            2,
            CaseInput::Trsv { uplo: Uplo::Upper, trans: Trans::No, n: 2, a: v(&[1.0, 0.0, nan, nan]), b: v(&[1.0, 0.0]) },
            Expected::Exceptional,
        ),
        // U = [1 NaN 1; 0 1 1; 0 0 1], b = [2; 1; 1]: x(2) = 0 mid-solve
        case(
            Routine::Trsv,
            "regression",
            "upper-3x3",
            3,
            CaseInput::Trsv {
                uplo: Uplo::Upper,
                trans: Trans::No,
                n: 3,
                a: v(&[1.0, 0.0, 0.0, nan, 1.0, 0.0, 1.0, 1.0, 1.0]),
                b: v(&[2.0, 1.0, 1.0]),
            },
            Expected::Exceptional,
        ),
        // L = transpose of the first U, solving Lᵀx = b
        case(
            Routine::Trsv,
            "regression",
            "lower-trans-2x2",
            2,
            CaseInput::Trsv { uplo: Uplo::Lower, trans: Trans::Trans, n: 2, a: v(&[1.0, nan, 0.0, nan]), b: v(&[1.0, 0.0]) },
            Expected::Exceptional,
        ),
        // Schur update 2 - NaN·0 must give NaN
        case(
            Routine::Ger,
            "regression",
            "schur-1x1",
            1,
            CaseInput::Ger { m: 1, n: 1, alpha: T::from_f64_lossy(-1.0), x: v(&[nan]), y: v(&[0.0]), a: v(&[2.0]) },
            Expected::Exceptional,
        ),
        // A = [1 0; NaN 2], b = [0; 1]
        case(
            Routine::Gesv,
            "regression",
            "nan-2x2",
            2,
            CaseInput::Gesv { n: 2, a: v(&[1.0, nan, 0.0, 2.0]), b: v(&[0.0, 1.0]) },
            Expected::Exceptional,
        ),
    ]
}
