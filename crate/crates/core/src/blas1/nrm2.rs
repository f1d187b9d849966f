use num_complex::Complex;

use crate::numeric::{is_inf, is_nan, Real};
use crate::view::VectorView;

/// Running sum of squares held relative to a power-of-two scale `2^e`,
/// where `e` is the exponent of the largest magnitude seen so far.
///
/// Every stored quantity is normalized against the current maximum, so the
/// rounding sequence depends only on the ratios between entries: scaling the
/// input by a power of two scales the result by exactly that power.
struct ScaledSsq<T> {
    e: i32,
    inv: T,
    ssq: T,
    saw_inf: bool,
}

enum Step {
    Continue,
    NaN,
}

impl<T: Real> ScaledSsq<T> {
    fn new() -> Self {
        ScaledSsq { e: 0, inv: T::one(), ssq: T::zero(), saw_inf: false }
    }

    #[inline]
    fn push(&mut self, x: T) -> Step {
        if is_nan(x) {
            return Step::NaN;
        }
        if is_inf(x) {
            self.saw_inf = true;
            return Step::Continue;
        }
        let ax = x.abs();
        if ax == T::zero() {
            return Step::Continue;
        }
        let ex = ax.exponent();
        if self.ssq == T::zero() || ex > self.e {
            if self.ssq != T::zero() {
                self.ssq = self.ssq.scale_pow2(2 * (self.e - ex));
            }
            self.e = ex;
            self.inv = T::pow2(-ex);
        }
        let y = if self.inv.is_finite() && self.inv != T::zero() {
            ax * self.inv
        } else {
            ax.scale_pow2(-self.e)
        };
        self.ssq += y * y;
        Step::Continue
    }

    fn finish(self) -> T {
        if self.saw_inf {
            T::infinity()
        } else if self.ssq == T::zero() {
            T::zero()
        } else {
            self.ssq.sqrt().scale_pow2(self.e)
        }
    }
}

/// Euclidean norm of a real vector. Any NaN gives NaN; otherwise any Inf gives +Inf.
pub fn nrm2_real<T: Real>(v: VectorView<'_, T>) -> T {
    let mut acc = ScaledSsq::new();
    for x in v.iter() {
        if let Step::NaN = acc.push(x) {
            return T::nan();
        }
    }
    acc.finish()
}

/// Euclidean norm of a complex vector, treating each component as an entry.
pub fn nrm2_complex<T: Real>(v: VectorView<'_, Complex<T>>) -> T {
    let mut acc = ScaledSsq::new();
    for z in v.iter() {
        if let Step::NaN = acc.push(z.re) {
            return T::nan();
        }
        if let Step::NaN = acc.push(z.im) {
            return T::nan();
        }
    }
    acc.finish()
}
