use num_complex::Complex;

use super::Real;

/// Floating-point class used by every exception decision in the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FpClass {
    Finite,
    Inf,
    NaN,
}

/// Classify by exponent field: all-ones means Inf (zero mantissa) or NaN.
/// Quiet and signaling NaNs are not distinguished; payloads are ignored.
#[inline]
pub fn classify<T: Real>(x: T) -> FpClass {
    if x.biased_exponent() != T::EXP_FIELD_MAX {
        FpClass::Finite
    } else if x.mantissa_bits() == 0 {
        FpClass::Inf
    } else {
        FpClass::NaN
    }
}

#[inline]
pub fn is_nan<T: Real>(x: T) -> bool {
    classify(x) == FpClass::NaN
}

#[inline]
pub fn is_inf<T: Real>(x: T) -> bool {
    classify(x) == FpClass::Inf
}

#[inline]
pub fn is_exceptional<T: Real>(x: T) -> bool {
    x.biased_exponent() == T::EXP_FIELD_MAX
}

/// True iff either component is Inf or NaN.
#[inline]
pub fn is_exceptional_complex<T: Real>(z: Complex<T>) -> bool {
    is_exceptional(z.re) || is_exceptional(z.im)
}
