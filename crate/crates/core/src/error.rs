use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported field: {0}")]
    Field(String),

    #[error("malformed structure tables: {0}")]
    Malformed(String),

    #[error("restricted Lie algebra axioms violated: {0}")]
    Validation(crate::rla::ValidationReport),

    #[error("{what} requires an abelian algebra")]
    NonAbelian { what: &'static str },

    #[error("not a restricted ideal: {0}")]
    NotRestrictedIdeal(String),

    #[error("not a restricted subalgebra: {0}")]
    NotRestrictedSubalgebra(String),

    #[error("{what}: budget exceeded ({needed} > {cap})")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("{what}: cap exceeded ({needed} > {cap})")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("elements belong to different enveloping algebras")]
    ParentMismatch,

    #[error("{0} requires a commutative algebra")]
    NonCommutative(&'static str),

    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a size guard rather than by bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. }
        )
    }
}
