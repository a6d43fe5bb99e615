//! Exact scalars, polynomials, dense matrices and small tensors.

mod coeff;
mod matrix;
mod poly;
mod scalar;
mod tensor;

pub use coeff::Coeff;
pub use matrix::{dual_basis_wrt_form, Matrix};
pub use poly::{Poly, MAX_VARS};
pub use scalar::Scalar;
pub use tensor::{Tensor2, Tensor3};
