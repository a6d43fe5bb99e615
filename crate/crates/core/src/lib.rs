//! Exact computations for Novikov bialgebras and related structures: identity
//! checks, coalgebras and bialgebras, Yang-Baxter type equations, doubles,
//! factorizations, Rota-Baxter operators and induced Lie bialgebras.
//!
//! All arithmetic is over the rationals. Basis-tuple scans run on rayon when
//! the `parallel` feature is enabled (the default) and sequentially otherwise;
//! results are identical either way.

pub mod algebra;
pub mod bialgebra;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod kernel;
pub mod par;
pub mod report;
pub mod yangbaxter;

pub use error::NovaError;
pub use kernel::{Matrix, Poly, Scalar, Tensor2, Tensor3};
