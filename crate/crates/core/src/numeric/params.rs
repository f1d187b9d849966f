use super::{Precision, Real};

/// Machine constants of one working precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MachineParams<T> {
    /// Largest finite value (OV).
    pub ov: T,
    /// Smallest positive normal value (UN).
    pub un: T,
    /// Safe minimum: `1/sfmin` does not overflow.
    pub sfmin: T,
    /// Blue's lower threshold `b`: squares of values in `[b, B]` neither underflow nor overflow.
    pub blue_min: T,
    /// Blue's upper threshold `B`.
    pub blue_max: T,
    /// Scale applied to values below `b` before squaring.
    pub blue_scale_min: T,
    /// Scale applied to values above `B` before squaring.
    pub blue_scale_max: T,
    /// Relative machine epsilon (spacing of numbers at 1).
    pub eps: T,
    /// Biased exponent of Inf and NaN.
    pub max_exponent: u32,
}

/// Error raised when computed constants violate the documented invariants.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("machine parameter invariant violated: {0}")]
pub struct ParamsError(pub &'static str);

impl<T: Real> MachineParams<T> {
    pub fn new() -> Self {
        let ov = T::max_value();
        let un = T::min_positive_value();
        let small = T::one() / ov;
        let sfmin = if small >= un {
            small * (T::one() + T::epsilon())
        } else {
            un
        };
        // Blue's thresholds from the exponent range: ceil((emin-1)/2) and floor((emax-t+1)/2).
        let tsml = T::pow2(div_ceil2(T::MIN_EXP - 1));
        let tbig = T::pow2(div_floor2(T::MAX_EXP - T::DIGITS + 1));
        let ssml = T::pow2(-div_floor2(T::MIN_EXP - T::DIGITS));
        let sbig = T::pow2(-div_ceil2(T::MAX_EXP + T::DIGITS - 1));
        MachineParams {
            ov,
            un,
            sfmin,
            blue_min: tsml,
            blue_max: tbig,
            blue_scale_min: ssml,
            blue_scale_max: sbig,
            eps: T::epsilon(),
            max_exponent: T::EXP_FIELD_MAX,
        }
    }

    /// Check the invariants the NRM2 catalog and LU rely on.
    pub fn validate(&self) -> Result<(), ParamsError> {
        let two = T::one() + T::one();
        if !(self.un <= self.sfmin) {
            return Err(ParamsError("un <= sfmin"));
        }
        if (T::one() / self.sfmin).is_infinite() {
            return Err(ParamsError("1/sfmin overflows"));
        }
        let b2 = self.blue_min * self.blue_min;
        if !(b2 >= self.un) {
            return Err(ParamsError("blue_min^2 is not normal"));
        }
        let h = self.blue_min / two;
        if !(h * h < self.un) {
            return Err(ParamsError("(blue_min/2)^2 does not underflow"));
        }
        let big2 = self.blue_max * self.blue_max;
        if big2.is_infinite() || (big2.sqrt() != self.blue_max) {
            return Err(ParamsError("blue_max^2 overflows"));
        }
        if (self.blue_max * self.blue_scale_max).is_zero()
            || (self.blue_min * self.blue_scale_min).is_infinite()
        {
            return Err(ParamsError("scaling constants out of range"));
        }
        Ok(())
    }
}

impl<T: Real> Default for MachineParams<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Constants of `T`, computed and checked.
pub fn machine_params<T: Real>() -> MachineParams<T> {
    let p = MachineParams::<T>::new();
    debug_assert!(p.validate().is_ok());
    p
}

/// Precision-tagged constants for callers that pick the format at run time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnyMachineParams {
    Binary32(MachineParams<f32>),
    Binary64(MachineParams<f64>),
}

pub fn machine_params_for(precision: Precision) -> AnyMachineParams {
    match precision {
        Precision::Binary32 => AnyMachineParams::Binary32(machine_params()),
        Precision::Binary64 => AnyMachineParams::Binary64(machine_params()),
    }
}

fn div_floor2(k: i32) -> i32 {
    k.div_euclid(2)
}

fn div_ceil2(k: i32) -> i32 {
    -((-k).div_euclid(2))
}
