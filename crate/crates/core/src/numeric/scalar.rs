use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use super::classify::{is_exceptional, is_inf, is_nan};
use super::complex::{cmul_textbook, safe_cdiv};
use super::Real;

/// Element type of the level-2/3 kernels: a real `T` or a `Complex<T>`.
///
/// Complex products are the four-multiply textbook form; division is the
/// scaled robust quotient.
pub trait Scalar:
    Copy
    + PartialEq
    + Debug
    + Default
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    type Real: Real;
    const IS_COMPLEX: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: Self::Real) -> Self;
    fn conj(self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn div(self, rhs: Self) -> Self;
    /// `|re| + |im|` (plain `|x|` for reals).
    fn abs1(self) -> Self::Real;
    fn has_nan(self) -> bool;
    fn has_inf(self) -> bool;
    fn is_exceptional(self) -> bool;
    fn nan() -> Self;
    /// Components, real part first.
    fn parts(self) -> (Self::Real, Self::Real);
    fn from_parts(re: Self::Real, im: Self::Real) -> Self;

    #[inline]
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

macro_rules! impl_scalar_real {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const IS_COMPLEX: bool = false;
            #[inline]
            fn zero() -> Self {
                0.0
            }
            #[inline]
            fn one() -> Self {
                1.0
            }
            #[inline]
            fn from_real(r: Self) -> Self {
                r
            }
            #[inline]
            fn conj(self) -> Self {
                self
            }
            #[inline]
            fn mul(self, rhs: Self) -> Self {
                self * rhs
            }
            #[inline]
            fn div(self, rhs: Self) -> Self {
                self / rhs
            }
            #[inline]
            fn abs1(self) -> Self {
                self.abs()
            }
            #[inline]
            fn has_nan(self) -> bool {
                is_nan(self)
            }
            #[inline]
            fn has_inf(self) -> bool {
                is_inf(self)
            }
            #[inline]
            fn is_exceptional(self) -> bool {
                is_exceptional(self)
            }
            #[inline]
            fn nan() -> Self {
                <$t>::NAN
            }
            #[inline]
            fn parts(self) -> (Self, Self) {
                (self, 0.0)
            }
            #[inline]
            fn from_parts(re: Self, _im: Self) -> Self {
                re
            }
        }
    };
}

impl_scalar_real!(f32);
impl_scalar_real!(f64);

impl<T: Real> Scalar for Complex<T> {
    type Real = T;
    const IS_COMPLEX: bool = true;
    #[inline]
    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    #[inline]
    fn one() -> Self {
        Complex::new(T::one(), T::zero())
    }
    #[inline]
    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }
    #[inline]
    fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        cmul_textbook(self, rhs)
    }
    #[inline]
    fn div(self, rhs: Self) -> Self {
        safe_cdiv(self, rhs)
    }
    #[inline]
    fn abs1(self) -> T {
        self.re.abs() + self.im.abs()
    }
    #[inline]
    fn has_nan(self) -> bool {
        is_nan(self.re) || is_nan(self.im)
    }
    #[inline]
    fn has_inf(self) -> bool {
        is_inf(self.re) || is_inf(self.im)
    }
    #[inline]
    fn is_exceptional(self) -> bool {
        is_exceptional(self.re) || is_exceptional(self.im)
    }
    #[inline]
    fn nan() -> Self {
        Complex::new(T::nan(), T::nan())
    }
    #[inline]
    fn parts(self) -> (T, T) {
        (self.re, self.im)
    }
    #[inline]
    fn from_parts(re: T, im: T) -> Self {
        Complex::new(re, im)
    }
}

/// Equality that treats any two NaNs as equal (componentwise for complex).
pub fn nan_eq<S: Scalar>(a: S, b: S) -> bool {
    let (ar, ai) = a.parts();
    let (br, bi) = b.parts();
    let eq = |x: S::Real, y: S::Real| (is_nan(x) && is_nan(y)) || x == y;
    eq(ar, br) && eq(ai, bi)
}
