//! Brute-force one-sided ideal lattices of a built `u(L)`.
//!
//! Every right ideal is the sum of the cyclic right ideals `xA` of its elements, so the
//! lattice is the closure of `{0}` under "add a cyclic ideal". When `p^dim A` fits the
//! element budget all cyclic ideals are computed and the lattice is exact (`complete`).
//! Otherwise the cyclic ideals of a spanning family are used and the lattice is only a
//! sublattice; callers must not trust a "principal" verdict from that regime.
//!
//! Left ideals are handled by the same code with the multiplication side flipped.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::gfp::{FpVector, Subspace};
use crate::uenv::EnvAlgebra;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

/// A one-sided ideal with an optional single generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub side: Side,
    pub carrier: Subspace,
    pub witness: Option<FpVector>,
}

#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub side: Side,
    /// Sorted by dimension, then by carrier.
    pub ideals: Vec<Ideal>,
    /// True when every element of `A` was used as a seed.
    pub complete: bool,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.ideals.iter().any(|i| &i.carrier == s)
    }
}

/// Principality of every ideal on one side.
#[derive(Clone, Debug)]
pub struct SideVerdict {
    pub side: Side,
    pub principal: bool,
    pub ideal_count: usize,
    pub principal_count: usize,
    pub complete: bool,
    /// Smallest non-principal ideal (by dimension, then carrier), if any.
    pub witness: Option<Subspace>,
    pub elapsed: Duration,
}

fn times(a: &EnvAlgebra, x: &FpVector, m: usize, side: Side) -> FpVector {
    match side {
        Side::Right => a.mul_by_monomial_right(x, m),
        Side::Left => a.mul_by_monomial_left(x, m),
    }
}

/// `xA` (right) or `Ax` (left).
pub fn cyclic_ideal(a: &EnvAlgebra, x: &FpVector, side: Side) -> Subspace {
    Subspace::span(
        a.field(),
        a.dim(),
        (0..a.dim()).map(|m| times(a, x, m, side)).collect(),
    )
}

pub fn cyclic_right_ideal(a: &EnvAlgebra, x: &FpVector) -> Ideal {
    Ideal {
        side: Side::Right,
        carrier: cyclic_ideal(a, x, Side::Right),
        witness: Some(x.clone()),
    }
}

/// Closure of `s` under multiplication by each generator on the given side; the generators
/// and the identity generate `A`, so this is the whole ideal condition.
pub fn is_ideal(a: &EnvAlgebra, s: &Subspace, side: Side) -> bool {
    let gens: Vec<usize> = (0..a.lie().dim()).map(|i| a.generator_index(i)).collect();
    s.basis()
        .iter()
        .all(|b| gens.iter().all(|&g| s.contains(&times(a, b, g, side))))
}

pub fn is_right_ideal(a: &EnvAlgebra, s: &Subspace) -> bool {
    is_ideal(a, s, Side::Right)
}

pub fn is_left_ideal(a: &EnvAlgebra, s: &Subspace) -> bool {
    is_ideal(a, s, Side::Left)
}

fn exhaustive(a: &EnvAlgebra, limits: &Limits) -> bool {
    (a.field().p() as u64)
        .checked_pow(a.dim() as u32)
        .is_some_and(|n| n <= limits.max_elements)
}

/// Cyclic ideals keyed by carrier, each with the first generator met. Scanning monic
/// elements in lexicographic order makes that the lexicographically least generator, as a
/// scalar multiple of a generator generates the same ideal.
fn cyclic_ideals(
    a: &EnvAlgebra,
    side: Side,
    limits: &Limits,
) -> (IndexMap<Subspace, FpVector>, bool) {
    let full = Subspace::full(a.field(), a.dim());
    let mut out: IndexMap<Subspace, FpVector> = IndexMap::new();
    out.insert(
        Subspace::zero(a.field(), a.dim()),
        FpVector::zero(a.field(), a.dim()),
    );
    if exhaustive(a, limits) {
        for x in full.monic_elements() {
            out.entry(cyclic_ideal(a, &x, side)).or_insert(x);
        }
        return (out, true);
    }
    let mut queue: Vec<FpVector> = full.basis().to_vec();
    while let Some(x) = queue.pop() {
        let c = cyclic_ideal(a, &x, side);
        if !out.contains_key(&c) {
            queue.extend(c.basis().iter().cloned());
            out.insert(c, x);
        }
    }
    (out, false)
}

/// All ideals on one side, with single generators where found among the cyclic seeds.
pub fn enumerate_ideals(a: &EnvAlgebra, side: Side, limits: &Limits) -> Result<IdealLattice> {
    let (cyclic, complete) = cyclic_ideals(a, side, limits);
    let seeds: Vec<&Subspace> = cyclic.keys().filter(|c| !c.is_zero()).collect();
    let zero = Subspace::zero(a.field(), a.dim());
    let mut found: HashSet<Subspace> = HashSet::from([zero.clone()]);
    let mut work = vec![zero];
    while let Some(i) = work.pop() {
        for c in &seeds {
            if i.contains_subspace(c) {
                continue;
            }
            let s = i.sum(c)?;
            if !found.contains(&s) {
                if found.len() >= limits.max_lattice {
                    return Err(Error::CapExceeded {
                        what: "ideal lattice size",
                        needed: found.len() as u64 + 1,
                        cap: limits.max_lattice as u64,
                    });
                }
                found.insert(s.clone());
                work.push(s);
            }
        }
    }
    let mut ideals: Vec<Ideal> = found
        .into_iter()
        .map(|carrier| {
            let witness = cyclic.get(&carrier).cloned();
            Ideal {
                side,
                carrier,
                witness,
            }
        })
        .collect();
    if let Some(bad) = ideals.iter().find(|i| !is_ideal(a, &i.carrier, side)) {
        return Err(Error::Assertion(format!(
            "lattice member of dimension {} is not a {} ideal",
            bad.carrier.dim(),
            side.name()
        )));
    }
    ideals.sort_by(|x, y| (x.carrier.dim(), &x.carrier).cmp(&(y.carrier.dim(), &y.carrier)));
    Ok(IdealLattice {
        side,
        ideals,
        complete,
    })
}

/// Scans the monic elements of `i` in lexicographic order for a single generator.
pub fn is_principal(
    a: &EnvAlgebra,
    i: &Subspace,
    side: Side,
    max_elements: u64,
) -> Result<Option<FpVector>> {
    if i.is_zero() {
        return Ok(Some(FpVector::zero(a.field(), a.dim())));
    }
    let needed = i.cardinality().unwrap_or(u64::MAX);
    if needed > max_elements {
        return Err(Error::BudgetExceeded {
            what: "principality scan",
            needed,
            cap: max_elements,
        });
    }
    for x in i.monic_elements() {
        let c = cyclic_ideal(a, &x, side);
        if c.dim() == i.dim() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Is every ideal on `side` principal?
pub fn decide(a: &EnvAlgebra, side: Side, limits: &Limits) -> Result<SideVerdict> {
    let start = Instant::now();
    let mut lattice = enumerate_ideals(a, side, limits)?;
    if !lattice.complete {
        for ideal in lattice.ideals.iter_mut().filter(|i| i.witness.is_none()) {
            ideal.witness = is_principal(a, &ideal.carrier, side, limits.max_elements)?;
        }
    }
    let principal_count = lattice
        .ideals
        .iter()
        .filter(|i| i.witness.is_some())
        .count();
    let witness = lattice
        .ideals
        .iter()
        .find(|i| i.witness.is_none())
        .map(|i| i.carrier.clone());
    Ok(SideVerdict {
        side,
        principal: witness.is_none(),
        ideal_count: lattice.len(),
        principal_count,
        complete: lattice.complete,
        witness,
        elapsed: start.elapsed(),
    })
}

pub fn decide_pri(a: &EnvAlgebra, limits: &Limits) -> Result<SideVerdict> {
    decide(a, Side::Right, limits)
}

pub fn decide_pli(a: &EnvAlgebra, limits: &Limits) -> Result<SideVerdict> {
    decide(a, Side::Left, limits)
}
