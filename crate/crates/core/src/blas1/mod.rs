//! Level-1 kernels: IAMAX, NRM2, Givens generation and nonzero extents.

mod extent;
mod iamax;
mod nrm2;
mod rotg;

pub use extent::{first_nonzero, first_nonzero_row, last_nonzero, last_nonzero_row};
pub use iamax::{iamax_complex, iamax_real};
pub use nrm2::{nrm2_complex, nrm2_real};
pub use rotg::{rotg_complex, rotg_real, GivensComplex, GivensReal};
