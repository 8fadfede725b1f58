//! Exact linear algebra over a prime field F_p.
//!
//! Everything above this module speaks in [`FpVector`]s and canonical [`Subspace`]s:
//! ideals, series and kernels are all subspaces in reduced row echelon form, so equality of
//! subspaces is equality of values.

mod field;
mod matrix;
pub mod poly;
mod subspace;
mod vector;

pub use field::{PrimeField, DEFAULT_MAX_PRIME};
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::Subspace;
pub use vector::FpVector;
