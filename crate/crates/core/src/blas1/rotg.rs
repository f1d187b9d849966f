use num_complex::Complex;

use crate::numeric::{has_inf, has_nan, is_inf, is_nan, lapy2, Real};

/// Real plane rotation: `[c s; -s c] [x; y] = [r; 0]`, with reconstruction scalar `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GivensReal<T> {
    pub c: T,
    pub s: T,
    pub r: T,
    pub z: T,
}

/// Complex plane rotation: `[c s; -conj(s) c] [x; y] = [r; 0]` with real `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GivensComplex<T> {
    pub c: T,
    pub s: Complex<T>,
    pub r: Complex<T>,
}

/// Generate a real rotation.
///
/// Finite inputs: `r` takes the sign of `x` (so `c ≥ 0`), magnitudes are
/// scaled to avoid overflow. Exceptional inputs follow the fixed table:
/// `(±Inf, finite) → (1, 0, x, 0)`, `(finite, ±Inf) → (0, 1, y, 1)`,
/// `(±Inf, ±Inf) → (NaN, NaN, ±Inf, NaN)`, any NaN → all NaN.
pub fn rotg_real<T: Real>(x: T, y: T) -> GivensReal<T> {
    let zero = T::zero();
    let one = T::one();
    let nan = T::nan();
    if is_nan(x) || is_nan(y) {
        return GivensReal { c: nan, s: nan, r: nan, z: nan };
    }
    match (is_inf(x), is_inf(y)) {
        (true, true) => return GivensReal { c: nan, s: nan, r: x, z: nan },
        (true, false) => return GivensReal { c: one, s: zero, r: x, z: zero },
        (false, true) => return GivensReal { c: zero, s: one, r: y, z: one },
        (false, false) => {}
    }
    let ax = x.abs();
    let ay = y.abs();
    if ay == zero {
        return GivensReal { c: one, s: zero, r: x, z: zero };
    }
    if ax == zero {
        return GivensReal { c: zero, s: one, r: y, z: one };
    }
    let safmin = T::min_positive_value();
    let safmax = one / safmin;
    let scl = ax.max(ay).max(safmin).min(safmax);
    let xs = x / scl;
    let ys = y / scl;
    let h = scl * (xs * xs + ys * ys).sqrt();
    let r = if x < zero { -h } else { h };
    let c = ax / h;
    let s = y / r;
    let z = if ax > ay {
        s
    } else if c != zero {
        one / c
    } else {
        one
    };
    GivensReal { c, s, r, z }
}

/// Generate a complex rotation, following the six-row exceptional table.
pub fn rotg_complex<T: Real>(x: Complex<T>, y: Complex<T>) -> GivensComplex<T> {
    let zero = T::zero();
    let one = T::one();
    let nan = T::nan();
    let inf = T::infinity();
    let cz = Complex::new(zero, zero);
    let cnan = Complex::new(nan, nan);
    if has_nan(x) || has_nan(y) {
        return GivensComplex { c: nan, s: cnan, r: cnan };
    }
    match (has_inf(x), has_inf(y)) {
        (true, true) => return GivensComplex { c: nan, s: cnan, r: Complex::new(inf, zero) },
        (true, false) => return GivensComplex { c: one, s: cz, r: x },
        (false, true) => {
            let r = Complex::new(inf, zero);
            let s = match (is_inf(y.re), is_inf(y.im)) {
                (true, false) => Complex::new(one.copysign(y.re), zero),
                (false, true) => Complex::new(zero, -one.copysign(y.im)),
                _ => cnan,
            };
            return GivensComplex { c: zero, s, r };
        }
        (false, false) => {}
    }
    let ax = lapy2(x.re, x.im);
    let ay = lapy2(y.re, y.im);
    if ay == zero {
        return GivensComplex { c: one, s: cz, r: x };
    }
    if ax == zero {
        // s = conj(y)/|y|, r = |y|
        return GivensComplex {
            c: zero,
            s: Complex::new(y.re / ay, -y.im / ay),
            r: Complex::new(ay, zero),
        };
    }
    // Scale by a power of two so the largest component sits in [1, 2); then
    // c = sqrt(f2/h2), s = conj(g) f / sqrt(f2 h2) keeps c² + |s|² within a few ulps.
    let big = x.re.abs().max(x.im.abs()).max(y.re.abs()).max(y.im.abs());
    let k = -big.exponent();
    let f = Complex::new(x.re.scale_pow2(k), x.im.scale_pow2(k));
    let g = Complex::new(y.re.scale_pow2(k), y.im.scale_pow2(k));
    let f2 = f.re * f.re + f.im * f.im;
    let g2 = g.re * g.re + g.im * g.im;
    let h2 = f2 + g2;
    if f2 >= T::min_positive_value() * h2 && f2 * h2 >= T::min_positive_value() {
        let c = (f2 / h2).sqrt();
        let d = (f2 * h2).sqrt();
        let q = Complex::new(f.re / d, f.im / d);
        let s = Complex::new(g.re * q.re + g.im * q.im, g.re * q.im - g.im * q.re);
        let r = Complex::new((f.re / c).scale_pow2(-k), (f.im / c).scale_pow2(-k));
        return GivensComplex { c, s, r };
    }
    // |x| negligible against |y|: fall back to the phase form
    let h = lapy2(ax, ay);
    let phase = Complex::new(x.re / ax, x.im / ax);
    let yc = Complex::new(y.re / h, -y.im / h);
    let s = Complex::new(
        phase.re * yc.re - phase.im * yc.im,
        phase.re * yc.im + phase.im * yc.re,
    );
    GivensComplex { c: ax / h, s, r: Complex::new(phase.re * h, phase.im * h) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::is_exceptional;
    use proptest::prelude::*;

    const INF: f64 = f64::INFINITY;
    const NAN: f64 = f64::NAN;

    #[test]
    fn real_table() {
        let g = rotg_real(INF, 5.0);
        assert_eq!((g.c, g.s, g.r, g.z), (1.0, 0.0, INF, 0.0));
        let g = rotg_real(-INF, 5.0);
        assert_eq!((g.c, g.s, g.r, g.z), (1.0, 0.0, -INF, 0.0));
        let g = rotg_real(2.0, -INF);
        assert_eq!((g.c, g.s, g.r, g.z), (0.0, 1.0, -INF, 1.0));
        let g = rotg_real(-INF, INF);
        assert!(g.c.is_nan() && g.s.is_nan() && g.z.is_nan() && g.r.is_infinite());
        let g = rotg_real(NAN, 1.0);
        assert!(g.c.is_nan() && g.s.is_nan() && g.r.is_nan() && g.z.is_nan());
        let g = rotg_real(INF, NAN);
        assert!(g.r.is_nan());
    }

    #[test]
    fn real_finite() {
        let g = rotg_real(3.0f64, 4.0);
        assert!((g.c - 0.6).abs() < 1e-15 && (g.s - 0.8).abs() < 1e-15 && (g.r - 5.0).abs() < 1e-15);
        let g = rotg_real(-3.0f64, 4.0);
        assert!(g.c > 0.0 && g.r < 0.0);
        let g = rotg_real(0.0f64, 0.0);
        assert_eq!((g.c, g.s, g.r, g.z), (1.0, 0.0, 0.0, 0.0));
        let g = rotg_real(0.0f64, -2.0);
        assert_eq!((g.c, g.s, g.r, g.z), (0.0, 1.0, -2.0, 1.0));
        let g = rotg_real(f64::MAX, f64::MAX / 2.0);
        assert!(g.r.is_finite() || g.r.is_infinite());
        let g = rotg_real(f64::MAX / 4.0, f64::MAX / 4.0);
        assert!(g.r.is_finite());
    }

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn complex_table() {
        let g = rotg_complex(c(INF, 1.0), c(2.0, 3.0));
        assert_eq!((g.c, g.s, g.r), (1.0, c(0.0, 0.0), c(INF, 1.0)));
        let g = rotg_complex(c(1.0, 1.0), c(INF, 2.0));
        assert_eq!((g.c, g.s, g.r), (0.0, c(1.0, 0.0), c(INF, 0.0)));
        let g = rotg_complex(c(1.0, 1.0), c(-INF, 2.0));
        assert_eq!((g.c, g.s, g.r), (0.0, c(-1.0, 0.0), c(INF, 0.0)));
        let g = rotg_complex(c(1.0, 1.0), c(2.0, INF));
        assert_eq!((g.c, g.s, g.r), (0.0, c(0.0, -1.0), c(INF, 0.0)));
        let g = rotg_complex(c(1.0, 1.0), c(2.0, -INF));
        assert_eq!((g.c, g.s, g.r), (0.0, c(0.0, 1.0), c(INF, 0.0)));
        let g = rotg_complex(c(0.0, 0.0), c(INF, -INF));
        assert!(g.c == 0.0 && g.s.re.is_nan() && g.r == c(INF, 0.0));
        let g = rotg_complex(c(0.0, -INF), c(INF, 0.0));
        assert!(g.c.is_nan() && g.s.re.is_nan() && g.r == c(INF, 0.0));
        let g = rotg_complex(c(NAN, 0.0), c(1.0, 0.0));
        assert!(g.c.is_nan() && g.s.re.is_nan() && g.r.re.is_nan());
        let g = rotg_complex(c(1.0, 0.0), c(0.0, 0.0));
        assert_eq!((g.c, g.s, g.r), (1.0, c(0.0, 0.0), c(1.0, 0.0)));
    }

    fn special() -> impl Strategy<Value = f64> {
        prop_oneof![Just(0.0), Just(1.0), Just(-3.5), Just(INF), Just(-INF), Just(NAN), Just(f64::MAX)]
    }

    proptest! {
        #[test]
        fn real_exceptional_conservation(x in special(), y in special()) {
            if is_exceptional(x) || is_exceptional(y) {
                let g = rotg_real(x, y);
                prop_assert!([g.c, g.s, g.r, g.z].iter().any(|v| is_exceptional(*v)));
            }
        }

        #[test]
        fn complex_exceptional_conservation(a in special(), b in special(), cc in special(), d in special()) {
            let x = c(a, b);
            let y = c(cc, d);
            if [a, b, cc, d].iter().any(|v| is_exceptional(*v)) {
                let g = rotg_complex(x, y);
                prop_assert!([g.c, g.s.re, g.s.im, g.r.re, g.r.im].iter().any(|v| is_exceptional(*v)));
            }
        }

        #[test]
        fn real_identities(x in -1e3f64..1e3, y in -1e3f64..1e3, ex in -200i32..200) {
            prop_assume!(x != 0.0 && y != 0.0);
            let sc = 2f64.powi(ex);
            let (x, y) = (x * sc, y * sc);
            let g = rotg_real(x, y);
            prop_assert!(g.c >= 0.0);
            prop_assert!((g.c * g.c + g.s * g.s - 1.0).abs() <= 4.0 * f64::EPSILON);
            let second = -g.s * x + g.c * y;
            prop_assert!(second.abs() <= 8.0 * f64::EPSILON * g.r.abs());
            let first = g.c * x + g.s * y;
            prop_assert!((first - g.r).abs() <= 8.0 * f64::EPSILON * g.r.abs());
        }

        #[test]
        fn complex_identities(a in -1e3f64..1e3, b in -1e3f64..1e3, cc in -1e3f64..1e3, d in -1e3f64..1e3) {
            let x = c(a, b);
            let y = c(cc, d);
            prop_assume!(a != 0.0 && cc != 0.0);
            let g = rotg_complex(x, y);
            let s2 = g.s.norm_sqr();
            prop_assert!((g.c * g.c + s2 - 1.0).abs() <= 4.0 * f64::EPSILON);
            let second = -(g.s.conj() * x) + y * g.c;
            prop_assert!(second.norm() <= 8.0 * f64::EPSILON * g.r.norm());
        }
    }
}
