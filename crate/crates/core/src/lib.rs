//! Restricted Lie algebras over prime fields, their restricted enveloping algebras, and two
//! independent deciders for whether such an enveloping algebra is a principal ideal ring.
//!
//! * [`gfp`]: exact linear algebra over F_p.
//! * [`rla`]: the restricted Lie algebra object, p-th powers, series and structure tests.
//! * [`uenv`]: the restricted enveloping algebra with its PBW basis.
//! * [`ideals`]: brute-force enumeration of one-sided ideal lattices.
//! * [`criterion`]: the structural and brute deciders and the audit harness.
//! * [`catalog`]: named algebra families.
//! * [`cli`]: the document format and the command-line front end.

pub mod catalog;
pub mod cli;
pub mod criterion;
mod error;
pub mod gfp;
pub mod ideals;
pub mod rla;
pub mod uenv;

pub use error::{Error, Result};

/// Size guards shared by every exhaustive routine. Exceeding one is always an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of elements any single scan may enumerate.
    pub max_elements: u64,
    /// Largest number of ideals a lattice may hold.
    pub max_lattice: usize,
    /// Largest enveloping algebra dimension `p^dim L` that may be built.
    pub max_env_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1 << 16,
            max_lattice: 1 << 20,
            max_env_dim: 19683,
        }
    }
}
