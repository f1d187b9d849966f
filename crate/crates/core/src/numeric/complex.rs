use num_complex::Complex;

use super::classify::{is_exceptional_complex, is_inf, is_nan};
use super::Real;

/// `sqrt(x^2 + y^2)` without undue overflow or underflow.
///
/// Inf wins over NaN; a NaN with no Inf gives NaN.
pub fn lapy2<T: Real>(x: T, y: T) -> T {
    if is_inf(x) || is_inf(y) {
        return T::infinity();
    }
    if is_nan(x) || is_nan(y) {
        return T::nan();
    }
    let xa = x.abs();
    let ya = y.abs();
    let (w, z) = if xa >= ya { (xa, ya) } else { (ya, xa) };
    if z == T::zero() {
        w
    } else {
        let q = z / w;
        w * (T::one() + q * q).sqrt()
    }
}

/// Modulus of `z`, computed with scaling.
pub fn safe_cabs<T: Real>(z: Complex<T>) -> T {
    lapy2(z.re, z.im)
}

/// Robust complex division `a / b` (scaled Smith algorithm).
///
/// If any input component is Inf or NaN the result contains an Inf or NaN;
/// a NaN input with no Inf input always yields a NaN.
pub fn safe_cdiv<T: Real>(a: Complex<T>, b: Complex<T>) -> Complex<T> {
    let q = ladiv(a.re, a.im, b.re, b.im);
    let any_nan = is_nan(a.re) || is_nan(a.im) || is_nan(b.re) || is_nan(b.im);
    let any_inf = !any_nan && (is_exceptional_complex(a) || is_exceptional_complex(b));
    if any_nan && !(is_nan(q.re) || is_nan(q.im)) {
        return Complex::new(T::nan(), T::nan());
    }
    if any_inf && !is_exceptional_complex(q) {
        return Complex::new(T::nan(), T::nan());
    }
    q
}

fn ladiv<T: Real>(a: T, b: T, c: T, d: T) -> Complex<T> {
    let one = T::one();
    let two = one + one;
    let half = one / two;
    let ov = T::max_value();
    let un = T::min_positive_value();
    let eps = T::epsilon() / two;
    let bs = two;
    let be = bs / (eps * eps);

    let (mut aa, mut bb, mut cc, mut dd) = (a, b, c, d);
    let ab = a.abs().max(b.abs());
    let cd = c.abs().max(d.abs());
    let mut s = one;
    if ab >= half * ov {
        aa *= half;
        bb *= half;
        s *= two;
    }
    if cd >= half * ov {
        cc *= half;
        dd *= half;
        s *= half;
    }
    if ab <= un * bs / eps {
        aa *= be;
        bb *= be;
        s /= be;
    }
    if cd <= un * bs / eps {
        cc *= be;
        dd *= be;
        s *= be;
    }
    let (p, q) = if d.abs() <= c.abs() {
        ladiv1(aa, bb, cc, dd)
    } else {
        let (p, q) = ladiv1(bb, aa, dd, cc);
        (p, -q)
    };
    Complex::new(p * s, q * s)
}

fn ladiv1<T: Real>(a: T, b: T, c: T, d: T) -> (T, T) {
    let r = d / c;
    let t = T::one() / (c + d * r);
    let p = ladiv2(a, b, c, d, r, t);
    let q = ladiv2(b, -a, c, d, r, t);
    (p, q)
}

fn ladiv2<T: Real>(a: T, b: T, c: T, d: T, r: T, t: T) -> T {
    if r != T::zero() {
        let br = b * r;
        if br != T::zero() {
            (a + br) * t
        } else {
            a * t + (b * t) * r
        }
    } else {
        (a + d * (b / c)) * t
    }
}

/// Four-multiply product `(ac - bd) + (ad + bc)i` with no recovery.
#[inline]
pub fn cmul_textbook<T: Real>(a: Complex<T>, b: Complex<T>) -> Complex<T> {
    Complex::new(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)
}

/// Product with the C Annex G recovery: an infinite operand times a
/// nonzero (finite or infinite) operand gives an infinite result.
pub fn cmul_annexg<T: Real>(x: Complex<T>, y: Complex<T>) -> Complex<T> {
    let (mut a, mut b, mut c, mut d) = (x.re, x.im, y.re, y.im);
    let ac = a * c;
    let bd = b * d;
    let ad = a * d;
    let bc = b * c;
    let re = ac - bd;
    let im = ad + bc;
    if !(is_nan(re) && is_nan(im)) {
        return Complex::new(re, im);
    }
    let one = T::one();
    let zero = T::zero();
    let box_inf = |v: T| if is_inf(v) { one.copysign(v) } else { zero.copysign(v) };
    let zero_nan = |v: T| if is_nan(v) { zero.copysign(v) } else { v };
    let mut recalc = false;
    if is_inf(a) || is_inf(b) {
        a = box_inf(a);
        b = box_inf(b);
        c = zero_nan(c);
        d = zero_nan(d);
        recalc = true;
    }
    if is_inf(c) || is_inf(d) {
        c = box_inf(c);
        d = box_inf(d);
        a = zero_nan(a);
        b = zero_nan(b);
        recalc = true;
    }
    if !recalc && (is_inf(ac) || is_inf(bd) || is_inf(ad) || is_inf(bc)) {
        a = zero_nan(a);
        b = zero_nan(b);
        c = zero_nan(c);
        d = zero_nan(d);
        recalc = true;
    }
    if recalc {
        let inf = T::infinity();
        Complex::new(inf * (a * c - b * d), inf * (a * d + b * c))
    } else {
        Complex::new(re, im)
    }
}

/// True iff any component of `z` is NaN.
#[inline]
pub fn has_nan<T: Real>(z: Complex<T>) -> bool {
    is_nan(z.re) || is_nan(z.im)
}

/// True iff any component of `z` is Inf.
#[inline]
pub fn has_inf<T: Real>(z: Complex<T>) -> bool {
    is_inf(z.re) || is_inf(z.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::classify::{classify, is_exceptional, FpClass};
    use num_rational::BigRational;
    use num_traits::{FromPrimitive, ToPrimitive};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn c<T: Real>(re: T, im: T) -> Complex<T> {
        Complex::new(re, im)
    }

    #[test]
    fn cabs_examples() {
        assert_eq!(safe_cabs(c(3.0f64, 4.0)), 5.0);
        assert_eq!(safe_cabs(c(f64::INFINITY, f64::NAN)), f64::INFINITY);
        assert_eq!(safe_cabs(c(f32::NAN, f32::NEG_INFINITY)), f32::INFINITY);
        assert!(safe_cabs(c(f64::NAN, 1.0)).is_nan());
        let h = f64::MAX / 2.0;
        let r = safe_cabs(c(h, h));
        assert_eq!(classify(r), FpClass::Finite);
        // oracle: h*sqrt(2) evaluated without overflow as (h/2)*sqrt(2)*2 in exact scaling
        let want = (h / 4.0) * std::f64::consts::SQRT_2 * 4.0;
        assert!(f64::ulps_between(r, want) <= 2);
        let h32 = f32::MAX / 2.0;
        let r32 = safe_cabs(c(h32, h32));
        let want32 = (h32 as f64 * std::f64::consts::SQRT_2) as f32;
        assert!(f32::ulps_between(r32, want32) <= 2);
    }

    #[test]
    fn cdiv_examples() {
        assert_eq!(safe_cdiv(c(1.0f64, 0.0), c(2.0, 0.0)), c(0.5, 0.0));
        let h = f64::MAX / 2.0;
        let q = safe_cdiv(c(h, h), c(h, h));
        assert!(f64::ulps_between(q.re, 1.0) <= 1 && q.im == 0.0);
        let h32 = f32::MAX / 2.0;
        let q = safe_cdiv(c(h32, h32), c(h32, h32));
        assert!(f32::ulps_between(q.re, 1.0) <= 1 && q.im == 0.0);
        let q = safe_cdiv(c(1.0f64, 1.0), c(0.0, 0.0));
        assert!(is_exceptional_complex(q));
    }

    #[test]
    fn annexg_overflow_recovery_can_drop_nan() {
        // the recovery treats an overflowed partial product as infinite and
        // zeroes the NaN component, so the NaN is not guaranteed to survive
        let p = cmul_annexg(c(-2.5f64, 1e-137), c(f64::MAX, f64::NAN));
        assert!(is_exceptional_complex(p));
    }

    #[test]
    fn cdiv_infinite_divisor_stays_exceptional() {
        let q = safe_cdiv(c(1.0f64, 2.0), c(f64::INFINITY, 0.0));
        assert!(is_exceptional_complex(q));
    }

    #[test]
    fn cmul_examples() {
        let inf = f64::INFINITY;
        let t = cmul_textbook(c(inf, 0.0), c(inf, inf));
        assert!(t.re.is_nan() && t.im.is_nan());
        let g = cmul_annexg(c(inf, 0.0), c(inf, inf));
        assert!(g.re.is_infinite() && g.im.is_infinite());
        assert_eq!(cmul_textbook(c(1.0, 2.0), c(3.0, 4.0)), c(-5.0, 10.0));
        assert_eq!(cmul_annexg(c(1.0, 2.0), c(3.0, 4.0)), c(-5.0, 10.0));
    }

    fn to_rat(x: f64) -> BigRational {
        BigRational::from_f64(x).unwrap()
    }

    // Exact rational quotient rounded once to f64.
    fn oracle_div(a: Complex<f64>, b: Complex<f64>) -> (f64, f64) {
        let (ar, ai, br, bi) = (to_rat(a.re), to_rat(a.im), to_rat(b.re), to_rat(b.im));
        let den = &br * &br + &bi * &bi;
        let re = (&ar * &br + &ai * &bi) / &den;
        let im = (&ai * &br - &ar * &bi) / &den;
        (re.to_f64().unwrap(), im.to_f64().unwrap())
    }

    fn normwise_ulps(got: (f64, f64), want: (f64, f64), eps: f64) -> f64 {
        let err = ((got.0 - want.0).powi(2) + (got.1 - want.1).powi(2)).sqrt();
        let mag = (want.0.powi(2) + want.1.powi(2)).sqrt();
        err / (mag * eps)
    }

    #[test]
    fn cdiv_accuracy_f64_vs_rational_oracle() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let mut worst = 0.0f64;
        for _ in 0..10_000 {
            let mut pick = || {
                let m: f64 = rng.gen_range(-1.0..1.0);
                let e: i32 = rng.gen_range(-20..20);
                m * 2f64.powi(e)
            };
            let a = c(pick(), pick());
            let b = c(pick(), pick());
            if b.re == 0.0 && b.im == 0.0 {
                continue;
            }
            let q = safe_cdiv(a, b);
            let want = oracle_div(a, b);
            if want.0 == 0.0 && want.1 == 0.0 {
                continue;
            }
            worst = worst.max(normwise_ulps((q.re, q.im), want, f64::EPSILON));
        }
        assert!(worst <= 4.0, "worst normwise error {worst} ulps");
    }

    #[test]
    fn cdiv_accuracy_f32_vs_f64_oracle() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        let mut worst = 0.0f64;
        for _ in 0..10_000 {
            let mut pick = || {
                let m: f32 = rng.gen_range(-1.0..1.0);
                let e: i32 = rng.gen_range(-20..20);
                m * 2f32.powi(e)
            };
            let a = c(pick(), pick());
            let b = c(pick(), pick());
            if b.re == 0.0 && b.im == 0.0 {
                continue;
            }
            let q = safe_cdiv(a, b);
            let wide = oracle_div(
                c(a.re as f64, a.im as f64),
                c(b.re as f64, b.im as f64),
            );
            if wide.0 == 0.0 && wide.1 == 0.0 {
                continue;
            }
            worst = worst.max(normwise_ulps(
                (q.re as f64, q.im as f64),
                wide,
                f32::EPSILON as f64,
            ));
        }
        assert!(worst <= 4.0, "worst normwise error {worst} ulps");
    }

    fn special_f64() -> impl Strategy<Value = f64> {
        prop_oneof![
            Just(0.0),
            Just(-0.0),
            Just(1.0),
            Just(-2.5),
            Just(f64::MAX),
            Just(-f64::MAX),
            Just(f64::MIN_POSITIVE),
            Just(f64::from_bits(1)),
            Just(f64::INFINITY),
            Just(f64::NEG_INFINITY),
            Just(f64::NAN),
            any::<f64>(),
        ]
    }

    fn cz() -> impl Strategy<Value = Complex<f64>> {
        (special_f64(), special_f64()).prop_map(|(a, b)| Complex::new(a, b))
    }

    fn nan_no_inf(zs: &[Complex<f64>]) -> bool {
        zs.iter().any(|z| has_nan(*z)) && !zs.iter().any(|z| has_inf(*z))
    }

    proptest! {
        #[test]
        fn nan_absorption(a in cz(), b in cz()) {
            if nan_no_inf(&[a, b]) {
                prop_assert!(has_nan(safe_cdiv(a, b)));
                prop_assert!(has_nan(cmul_textbook(a, b)));
            }
        }

        #[test]
        fn exception_conservation(a in cz(), b in cz()) {
            if is_exceptional_complex(a) || is_exceptional_complex(b) {
                prop_assert!(is_exceptional_complex(safe_cdiv(a, b)));
                prop_assert!(is_exceptional_complex(cmul_textbook(a, b)));
                prop_assert!(is_exceptional_complex(cmul_annexg(a, b)));
            }
            if is_exceptional_complex(a) {
                prop_assert!(is_exceptional(safe_cabs(a)));
            }
        }

        #[test]
        fn cabs_finite_for_log_uniform_magnitudes(t in 0.0f64..1.0, theta in 0.0f64..std::f64::consts::FRAC_PI_2) {
            // magnitudes log-uniform in [UN*eps, OV]
            let lo = (f64::MIN_POSITIVE * f64::EPSILON).ln();
            let hi = f64::MAX.ln();
            let r = (lo + t * (hi - lo)).exp().min(f64::MAX);
            let z = Complex::new(r * theta.cos(), r * theta.sin());
            let exact = to_rat(z.re) * to_rat(z.re) + to_rat(z.im) * to_rat(z.im);
            let ov = to_rat(f64::MAX);
            prop_assume!(exact <= &ov * &ov);
            prop_assert_eq!(classify(safe_cabs(z)), FpClass::Finite);
        }

        #[test]
        fn cabs_finite_f32(t in 0.0f64..1.0, theta in 0.0f64..std::f64::consts::FRAC_PI_2) {
            let lo = ((f32::MIN_POSITIVE * f32::EPSILON) as f64).ln();
            let hi = (f32::MAX as f64).ln();
            let r = (lo + t * (hi - lo)).exp();
            let z = Complex::new((r * theta.cos()) as f32, (r * theta.sin()) as f32);
            let m = ((z.re as f64).powi(2) + (z.im as f64).powi(2)).sqrt();
            prop_assume!(m <= f32::MAX as f64);
            prop_assert_eq!(classify(safe_cabs(z)), FpClass::Finite);
        }
    }

    #[test]
    fn annexg_recovers_infinite_times_finite() {
        let inf = f64::INFINITY;
        let g = cmul_annexg(c(inf, f64::NAN), c(2.0, 0.0));
        assert!(g.re.is_infinite() || g.im.is_infinite());
        let g = cmul_annexg(c(f64::NAN, inf), c(0.0, 1.0));
        assert!(has_inf(g));
    }

}
