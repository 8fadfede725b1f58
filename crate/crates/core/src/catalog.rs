//! Named families of restricted Lie algebras.
//!
//! Basis names are `x, y, z` up to dimension 3 and `e1, e2, ...` beyond. In `mixed(a, b)`
//! the torus part is named `t1..ta` and the nilcyclic part `n1..nb`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gfp::{FpVector, PrimeField};
use crate::rla::RestrictedLieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    /// Abelian, `e_i^[p] = e_i`.
    Torus(usize),
    /// Abelian, `e_i^[p] = e_(i+1)` and the last basis vector maps to 0.
    Nilcyclic(usize),
    /// Abelian with zero p-map.
    StronglyAbelian(usize),
    /// `[x, y] = y`, `x^[p] = x`, `y^[p] = 0`.
    NonAbelian2,
    /// `[x, y] = z` central, zero p-map.
    Heisenberg,
    /// `torus(a) ⊕ nilcyclic(b)`.
    Mixed(usize, usize),
}

impl CatalogKind {
    pub fn dim(self) -> usize {
        match self {
            CatalogKind::Torus(d) | CatalogKind::Nilcyclic(d) | CatalogKind::StronglyAbelian(d) => {
                d
            }
            CatalogKind::NonAbelian2 => 2,
            CatalogKind::Heisenberg => 3,
            CatalogKind::Mixed(a, b) => a + b,
        }
    }
}

impl fmt::Display for CatalogKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKind::Torus(d) => write!(f, "torus:{d}"),
            CatalogKind::Nilcyclic(d) => write!(f, "nilcyclic:{d}"),
            CatalogKind::StronglyAbelian(d) => write!(f, "strongly_abelian:{d}"),
            CatalogKind::NonAbelian2 => write!(f, "nonabelian2"),
            CatalogKind::Heisenberg => write!(f, "heisenberg"),
            CatalogKind::Mixed(a, b) => write!(f, "mixed:{a},{b}"),
        }
    }
}

impl FromStr for CatalogKind {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) forms, e.g. `torus:2` or `mixed:1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown catalog kind `{s}`"));
        let (head, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        match (head, nums.as_slice()) {
            ("torus", &[d]) => Ok(CatalogKind::Torus(d)),
            ("nilcyclic", &[d]) => Ok(CatalogKind::Nilcyclic(d)),
            ("strongly_abelian", &[d]) => Ok(CatalogKind::StronglyAbelian(d)),
            ("nonabelian2", &[]) => Ok(CatalogKind::NonAbelian2),
            ("heisenberg", &[]) => Ok(CatalogKind::Heisenberg),
            ("mixed", &[a, b]) => Ok(CatalogKind::Mixed(a, b)),
            _ => Err(bad()),
        }
    }
}

pub(crate) fn default_names(d: usize) -> Vec<String> {
    if d <= 3 {
        ["x", "y", "z"][..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("e{i}")).collect()
    }
}

fn abelian(
    field: PrimeField,
    names: Vec<String>,
    pmap: impl Fn(usize) -> Option<usize>,
) -> Result<RestrictedLieAlgebra> {
    let d = names.len();
    let pm = (0..d)
        .map(|i| match pmap(i) {
            Some(j) => FpVector::unit(field, d, j),
            None => FpVector::zero(field, d),
        })
        .collect();
    RestrictedLieAlgebra::validated(field, names, Vec::new(), pm)
}

pub fn make(kind: CatalogKind, p: u32) -> Result<RestrictedLieAlgebra> {
    let field = PrimeField::new(p)?;
    let d = kind.dim();
    match kind {
        CatalogKind::Torus(_) => abelian(field, default_names(d), Some),
        CatalogKind::Nilcyclic(_) => {
            abelian(field, default_names(d), |i| (i + 1 < d).then_some(i + 1))
        }
        CatalogKind::StronglyAbelian(_) => abelian(field, default_names(d), |_| None),
        CatalogKind::NonAbelian2 => RestrictedLieAlgebra::validated(
            field,
            default_names(2),
            [(0, 1, FpVector::unit(field, 2, 1))],
            vec![FpVector::unit(field, 2, 0), FpVector::zero(field, 2)],
        ),
        CatalogKind::Heisenberg => RestrictedLieAlgebra::validated(
            field,
            default_names(3),
            [(0, 1, FpVector::unit(field, 3, 2))],
            vec![FpVector::zero(field, 3); 3],
        ),
        CatalogKind::Mixed(a, b) => {
            let t = abelian(field, (1..=a).map(|i| format!("t{i}")).collect(), Some)?;
            let n = abelian(field, (1..=b).map(|i| format!("n{i}")).collect(), |i| {
                (i + 1 < b).then_some(i + 1)
            })?;
            t.direct_sum(&n)
        }
    }
}

/// Every kind of dimension between 1 and `max_dim`, in a fixed order.
pub fn standard_kinds(max_dim: usize) -> Vec<CatalogKind> {
    let mut out = Vec::new();
    for d in 1..=max_dim {
        out.push(CatalogKind::Torus(d));
        out.push(CatalogKind::Nilcyclic(d));
        out.push(CatalogKind::StronglyAbelian(d));
    }
    if max_dim >= 2 {
        out.push(CatalogKind::NonAbelian2);
        out.push(CatalogKind::Mixed(1, 1));
    }
    if max_dim >= 3 {
        out.push(CatalogKind::Heisenberg);
        out.push(CatalogKind::Mixed(1, 2));
        out.push(CatalogKind::Mixed(2, 1));
    }
    out
}

/// `(kind, algebra)` for every standard kind at characteristic `p`.
pub fn standard_family(p: u32, max_dim: usize) -> Result<Vec<(CatalogKind, RestrictedLieAlgebra)>> {
    standard_kinds(max_dim)
        .into_iter()
        .map(|k| Ok((k, make(k, p)?)))
        .collect()
}
