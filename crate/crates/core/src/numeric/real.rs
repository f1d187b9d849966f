use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Working precision of a real scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Precision {
    Binary32,
    Binary64,
}

/// IEEE-754 binary floating-point type the library is generic over (`f32`, `f64`).
///
/// Everything exception-related is decided from the bit pattern, so the
/// answers do not depend on rounding mode or on compiler folding.
pub trait Real:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    const PRECISION: Precision;
    /// LAPACK-style name prefix: `S` or `D`.
    const PREFIX: char;
    /// Significand digits including the hidden bit.
    const DIGITS: i32;
    /// Smallest exponent `e` such that `2^(e-1)` is normal (Fortran `MINEXPONENT`).
    const MIN_EXP: i32;
    /// Exponent of the overflow threshold plus one (Fortran `MAXEXPONENT`).
    const MAX_EXP: i32;
    /// Biased exponent field of Inf and NaN.
    const EXP_FIELD_MAX: u32;

    fn to_raw(self) -> u64;
    fn from_raw(bits: u64) -> Self;
    fn biased_exponent(self) -> u32;
    fn mantissa_bits(self) -> u64;

    fn from_f64_lossy(x: f64) -> Self;
    fn to_f64_lossless(self) -> f64;

    /// Exact power of two, including subnormal and out-of-range results
    /// (which round to 0 or overflow to Inf).
    fn pow2(k: i32) -> Self {
        let bias = Self::MAX_EXP - 1;
        let frac_bits = Self::DIGITS - 1;
        if k > bias {
            Self::infinity()
        } else if k >= 1 - bias {
            Self::from_raw(((k + bias) as u64) << frac_bits)
        } else if k >= 1 - bias - frac_bits {
            Self::from_raw(1u64 << (k - (1 - bias - frac_bits)))
        } else {
            Self::zero()
        }
    }

    /// `x * 2^k`, done in steps that stay in range so the result is exact
    /// whenever it is representable.
    fn scale_pow2(self, k: i32) -> Self {
        let step = Self::MAX_EXP - 2;
        let mut x = self;
        let mut k = k;
        while k > step {
            x *= Self::pow2(step);
            k -= step;
        }
        while k < -step {
            x *= Self::pow2(-step);
            k += step;
        }
        x * Self::pow2(k)
    }

    /// `floor(log2 |x|)` for finite nonzero `x`, subnormals included.
    fn exponent(self) -> i32 {
        let bias = Self::MAX_EXP - 1;
        let e = self.biased_exponent() as i32;
        if e != 0 {
            e - bias
        } else {
            let m = self.mantissa_bits();
            let top = 63 - m.leading_zeros() as i32;
            top - (Self::DIGITS - 1) + 1 - bias
        }
    }

    /// Smallest representable value strictly greater than `self` (NaN stays NaN).
    fn next_up(self) -> Self {
        if self.is_nan() || self == Self::infinity() {
            return self;
        }
        if self == Self::zero() {
            return Self::from_raw(1);
        }
        let bits = self.to_raw();
        if self > Self::zero() {
            Self::from_raw(bits + 1)
        } else {
            Self::from_raw(bits - 1)
        }
    }

    /// Number of representable values between `a` and `b`; `u64::MAX` if either is NaN.
    fn ulps_between(a: Self, b: Self) -> u64 {
        if a.is_nan() || b.is_nan() {
            return u64::MAX;
        }
        let ka = ordered_key::<Self>(a);
        let kb = ordered_key::<Self>(b);
        ka.abs_diff(kb)
    }
}

fn ordered_key<T: Real>(x: T) -> i64 {
    let sign_bit = 1u64 << (T::DIGITS - 1 + exponent_width::<T>());
    let bits = x.to_raw();
    let mag = (bits & !sign_bit) as i64;
    if bits & sign_bit != 0 {
        -mag
    } else {
        mag
    }
}

fn exponent_width<T: Real>() -> i32 {
    (T::EXP_FIELD_MAX + 1).trailing_zeros() as i32
}

macro_rules! impl_real {
    ($t:ty, $bits:ty, $prec:expr, $prefix:expr, $frac:expr) => {
        impl Real for $t {
            const PRECISION: Precision = $prec;
            const PREFIX: char = $prefix;
            const DIGITS: i32 = <$t>::MANTISSA_DIGITS as i32;
            const MIN_EXP: i32 = <$t>::MIN_EXP;
            const MAX_EXP: i32 = <$t>::MAX_EXP;
            const EXP_FIELD_MAX: u32 = (2 * <$t>::MAX_EXP - 1) as u32;

            #[inline]
            fn to_raw(self) -> u64 {
                self.to_bits() as u64
            }
            #[inline]
            fn from_raw(bits: u64) -> Self {
                <$t>::from_bits(bits as $bits)
            }
            #[inline]
            fn biased_exponent(self) -> u32 {
                ((self.to_bits() >> $frac) as u32) & Self::EXP_FIELD_MAX
            }
            #[inline]
            fn mantissa_bits(self) -> u64 {
                (self.to_bits() as u64) & ((1u64 << $frac) - 1)
            }
            #[inline]
            fn from_f64_lossy(x: f64) -> Self {
                x as $t
            }
            #[inline]
            fn to_f64_lossless(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real!(f32, u32, Precision::Binary32, 'S', 23);
impl_real!(f64, u64, Precision::Binary64, 'D', 52);
