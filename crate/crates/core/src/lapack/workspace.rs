use crate::numeric::Real;

/// Width of the integer a workspace size is ultimately stored in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IntWidth {
    W32,
    W64,
}

impl IntWidth {
    pub fn max_value(self) -> u128 {
        match self {
            IntWidth::W32 => i32::MAX as u128,
            IntWidth::W64 => i64::MAX as u128,
        }
    }
}

/// Smallest value of `T` that is `≥ count` (or `+Inf`).
///
/// A workspace query hands its size back through a floating-point slot, so
/// the size a caller reads is this value, never less than what is needed.
pub fn round_up_to<T: Real>(count: u128) -> T {
    let r = T::from_u128(count).unwrap_or_else(T::infinity);
    if r.is_finite() && r.to_u128().is_some_and(|v| v < count) {
        r.next_up()
    } else {
        r
    }
}

/// Whether a workspace of `count` elements, reported as a `T` rounded
/// upward, still fits a signed integer of the given width.
pub fn workspace_fits<T: Real>(count: u128, width: IntWidth) -> bool {
    let r: T = round_up_to(count);
    r.is_finite() && r.to_u128().is_some_and(|v| v <= width.max_value())
}
