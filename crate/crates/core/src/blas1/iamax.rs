use num_complex::Complex;

use crate::numeric::{is_inf, is_nan, Real};
use crate::view::VectorView;

/// 1-based index of the first NaN; else of the first ±Inf; else of the first
/// entry of largest magnitude. Returns 0 for an empty vector.
pub fn iamax_real<T: Real>(v: VectorView<'_, T>) -> usize {
    let n = v.len();
    if n == 0 {
        return 0;
    }
    let mut smax = v.at(0).abs();
    if is_nan(smax) {
        return 1;
    }
    let mut idx = 1;
    for i in 1..n {
        let a = v.at(i).abs();
        // `!(a <= smax)` is true for a NaN and for a strictly larger value
        if !(a <= smax) {
            if is_nan(a) {
                return i + 1;
            }
            smax = a;
            idx = i + 1;
        }
    }
    idx
}

/// Complex IAMAX with magnitude proxy `|re| + |im|`.
///
/// Single pass. Once the proxy of a finite entry overflows, all later
/// comparisons use `0.25|re| + 0.25|im|` so huge finite entries still order.
pub fn iamax_complex<T: Real>(v: VectorView<'_, Complex<T>>) -> usize {
    let n = v.len();
    if n == 0 {
        return 0;
    }
    let quarter = T::from_f64_lossy(0.25);
    let mut no_inf_yet = true;
    let mut scaled = false;
    let mut smax = -T::one();
    let mut idx = 0;
    for i in 0..n {
        let z = v.at(i);
        if is_nan(z.re) || is_nan(z.im) {
            return i + 1;
        }
        if !no_inf_yet {
            continue;
        }
        if is_inf(z.re) || is_inf(z.im) {
            idx = i + 1;
            no_inf_yet = false;
        } else if !scaled {
            let x = z.re.abs() + z.im.abs();
            if is_inf(x) {
                scaled = true;
                smax = quarter * z.re.abs() + quarter * z.im.abs();
                idx = i + 1;
            } else if x > smax {
                smax = x;
                idx = i + 1;
            }
        } else {
            let x = quarter * z.re.abs() + quarter * z.im.abs();
            if x > smax {
                smax = x;
                idx = i + 1;
            }
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ia(v: &[f64]) -> usize {
        iamax_real(VectorView::from_slice(v))
    }

    fn ic(v: &[Complex<f64>]) -> usize {
        iamax_complex(VectorView::from_slice(v))
    }

    const NAN: f64 = f64::NAN;
    const INF: f64 = f64::INFINITY;

    #[test]
    fn real_examples() {
        assert_eq!(ia(&[0.0, NAN, 2.0]), 2);
        assert_eq!(ia(&[NAN, 0.0, 2.0]), 1);
        assert_eq!(ia(&[0.0, 2.0, NAN]), 3);
        assert_eq!(ia(&[3.0, -INF, 5.0, INF]), 2);
        assert_eq!(ia(&[1.0, -4.0, 4.0]), 2);
        assert_eq!(ia(&[]), 0);
        assert_eq!(ia(&[INF, NAN]), 2);
    }

    #[test]
    fn real_strided() {
        let d = [1.0, 100.0, -3.0, 100.0, 2.0];
        assert_eq!(iamax_real(VectorView::new(&d, 3, 2).unwrap()), 2);
    }

    #[test]
    fn complex_examples() {
        let c = Complex::new;
        assert_eq!(ic(&[c(1.0, 1.0), c(NAN, 0.0)]), 2);
        assert_eq!(ic(&[c(0.0, INF), c(NAN, 0.0)]), 2);
        assert_eq!(ic(&[c(1.0, 0.0), c(0.0, -INF), c(INF, INF)]), 2);
        assert_eq!(ic(&[]), 0);
        assert_eq!(ic(&[c(1.0, -3.0), c(2.0, 2.0), c(-4.0, 0.0)]), 1);
    }

    #[test]
    fn complex_overflowing_proxy_orders_huge_entries() {
        let ov = f64::MAX;
        let c = Complex::new;
        let v = [c(ov * 0.75, ov * 0.75), c(1.0, 1.0), c(ov * 0.9, ov * 0.9)];
        assert_eq!(ic(&v), 3);
        // 4A-style: odd k huge, even k small; answer is the last odd k
        let n = 10;
        let v: Vec<_> = (1..=n)
            .map(|k| {
                let kf = k as f64;
                if k % 2 == 0 {
                    c(-kf, kf)
                } else {
                    let s = ov * ((kf + 2.0) / (kf + 3.0));
                    c(s, s)
                }
            })
            .collect();
        assert_eq!(ic(&v), 9);
    }

    fn three_scan(v: &[f64]) -> usize {
        if v.is_empty() {
            return 0;
        }
        if let Some(i) = v.iter().position(|x| x.is_nan()) {
            return i + 1;
        }
        if let Some(i) = v.iter().position(|x| x.is_infinite()) {
            return i + 1;
        }
        let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        v.iter().position(|x| x.abs() == m).unwrap() + 1
    }

    fn entry() -> impl Strategy<Value = f64> {
        prop_oneof![
            Just(0.0),
            Just(1.0),
            Just(-2.0),
            Just(f64::MAX),
            Just(INF),
            Just(-INF),
            Just(NAN),
            -1e6f64..1e6,
        ]
    }

    proptest! {
        #[test]
        fn matches_three_scan(v in proptest::collection::vec(entry(), 0..12)) {
            prop_assert_eq!(ia(&v), three_scan(&v));
        }

        #[test]
        fn permutation_consistency(v in proptest::collection::vec(entry(), 1..10), seed: u64) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut p = v.clone();
            p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let a = v[ia(&v) - 1];
            let b = p[ia(&p) - 1];
            if v.iter().any(|x| x.is_nan()) {
                prop_assert!(a.is_nan() && b.is_nan());
            } else if v.iter().any(|x| x.is_infinite()) {
                prop_assert!(a.is_infinite() && b.is_infinite());
            } else {
                prop_assert_eq!(a.abs(), b.abs());
            }
        }

        #[test]
        fn complex_lifted_agrees_on_class(v in proptest::collection::vec(entry(), 1..10)) {
            let cv: Vec<_> = v.iter().map(|&x| Complex::new(x, 0.0)).collect();
            let i = ic(&cv);
            let j = ia(&v);
            if v.iter().any(|x| x.is_nan() || x.is_infinite()) {
                prop_assert_eq!(i, j);
            } else {
                prop_assert_eq!(v[i - 1].abs(), v[j - 1].abs());
            }
        }
    }
}
