use thiserror::Error;

/// Invalid view construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViewError {
    #[error("increment must be positive, got {0}")]
    BadIncrement(isize),
    #[error("leading dimension {ld} is smaller than max(1, rows = {rows})")]
    BadLeadingDimension { ld: usize, rows: usize },
    #[error("storage holds {have} elements but the view needs {need}")]
    TooShort { have: usize, need: usize },
}

/// Argument error from a kernel; `position` is the 1-based index of the
/// offending argument in the Fortran calling sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{routine}: parameter number {position} had an illegal value")]
pub struct BlasError {
    pub routine: &'static str,
    pub position: i32,
}

impl BlasError {
    pub(crate) fn new(routine: &'static str, position: i32) -> Self {
        BlasError { routine, position }
    }
}
