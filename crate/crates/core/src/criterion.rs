//! Deciding whether `u(L)` is a principal ideal ring.
//!
//! The structural decider works on `L` alone. A non-abelian `L` gives a no. For abelian
//! `L` with Fitting decomposition `L = T ⊕ N` (T the torus part of the p-map, N the
//! p-nilpotent part) the answer is yes iff `N` is nilcyclic. The reasoning: a torus ideal
//! consists of semisimple elements and so lies in `T`, and a quotient of a cyclic algebra is
//! cyclic, so some torus ideal has a cyclic quotient iff `L / T ≅ N` is cyclic; and a cyclic
//! p-nilpotent algebra is nilcyclic. That chain is checked against the brute decider by
//! [`audit`] rather than taken on trust.
//!
//! The brute decider builds `u(L)` and enumerates its right and left ideal lattices.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::default_names;
use crate::error::{Error, Result};
use crate::gfp::{FpVector, PrimeField, Subspace};
use crate::ideals::{self, Side, SideVerdict};
use crate::rla::RestrictedLieAlgebra;
use crate::uenv::EnvAlgebra;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Structural,
    Brute,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Structural => "structural",
            Method::Brute => "brute",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Certificate {
    /// Basis vectors `i < j` with `[e_i, e_j] != 0`.
    NonAbelian { left: usize, right: usize },
    /// Fitting decomposition of an abelian algebra. `generator` is a nilcyclic generator of
    /// `nil_part`, given in the coordinates of `L`, when one exists.
    Fitting {
        torus: Subspace,
        nil_part: Subspace,
        generator: Option<FpVector>,
    },
    /// Right and left lattice verdicts.
    Brute {
        right: SideVerdict,
        left: SideVerdict,
    },
}

#[derive(Clone, Debug)]
pub struct PirVerdict {
    pub is_pir: bool,
    pub method: Method,
    pub certificate: Certificate,
    pub elapsed: Duration,
}

impl PirVerdict {
    /// False only for a brute verdict drawn from an incomplete lattice.
    pub fn is_exhaustive(&self) -> bool {
        match &self.certificate {
            Certificate::Brute { right, left } => right.complete && left.complete,
            _ => true,
        }
    }
}

pub fn structural_decision(l: &RestrictedLieAlgebra, limits: &Limits) -> Result<PirVerdict> {
    let start = Instant::now();
    if let Some((left, right, _)) = l.upper_brackets().find(|(_, _, v)| !v.is_zero()) {
        return Ok(PirVerdict {
            is_pir: false,
            method: Method::Structural,
            certificate: Certificate::NonAbelian { left, right },
            elapsed: start.elapsed(),
        });
    }
    let (torus, nil_part) = l.fitting()?;
    let n = l.subalgebra(&nil_part)?;
    let test = n.is_nilcyclic(limits.max_elements)?;
    let generator = test.generator.map(|g| nil_part.combine(&g.entries()));
    Ok(PirVerdict {
        is_pir: test.cyclic,
        method: Method::Structural,
        certificate: Certificate::Fitting {
            torus,
            nil_part,
            generator,
        },
        elapsed: start.elapsed(),
    })
}

pub fn brute_decision(l: &RestrictedLieAlgebra, limits: &Limits) -> Result<PirVerdict> {
    let start = Instant::now();
    let a = EnvAlgebra::build(l, limits.max_env_dim)?;
    let right = ideals::decide_pri(&a, limits)?;
    let left = ideals::decide_pli(&a, limits)?;
    Ok(PirVerdict {
        is_pir: right.principal && left.principal,
        method: Method::Brute,
        certificate: Certificate::Brute { right, left },
        elapsed: start.elapsed(),
    })
}

/// Independent re-check of a structural yes: `T` is a torus and a restricted ideal, and
/// `g` together with `T` generates `L`. Returns a description of the first failure.
pub fn verify_structural_yes(
    l: &RestrictedLieAlgebra,
    v: &PirVerdict,
) -> std::result::Result<(), String> {
    let Certificate::Fitting {
        torus,
        generator: Some(g),
        ..
    } = &v.certificate
    else {
        return Err("no yes-certificate".into());
    };
    if !l.is_torus_subspace(torus) {
        return Err("certificate T is not a torus".into());
    }
    l.check_restricted_ideal(torus).map_err(|e| e.to_string())?;
    let mut gens = torus.basis().to_vec();
    gens.push(g.clone());
    if !l.restricted_closure(&gens).carrier.is_full() {
        return Err("generator does not generate L modulo T".into());
    }
    if !l.iterated_pth_power(g, l.dim()).is_zero() {
        return Err("generator is not p-nilpotent".into());
    }
    Ok(())
}

/// Independent re-check of a brute no on one side: the witness is an ideal and a full scan
/// of its elements finds no single generator.
pub fn verify_brute_no(
    a: &EnvAlgebra,
    witness: &Subspace,
    side: Side,
    max_elements: u64,
) -> Result<bool> {
    if !ideals::is_ideal(a, witness, side) {
        return Ok(false);
    }
    Ok(ideals::is_principal(a, witness, side, max_elements)?.is_none())
}

/// `U(L)` (ordinary enveloping algebra) is a principal ideal ring iff `dim L <= 1`.
pub fn ordinary_env_decision(dim: usize) -> bool {
    dim <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditMode {
    Exhaustive,
    Sampled { size: usize, seed: u64 },
}

/// Number of free coordinates in a candidate table: `dim * C(dim, 2)` structure constants
/// plus `dim^2` p-map entries.
pub fn table_coordinates(dim: usize) -> usize {
    dim * dim * (dim.saturating_sub(1)) / 2 + dim * dim
}

/// Decodes candidate number `index`: bracket values for pairs `(0,1), (0,2), ..., (1,2),
/// ...` in order, then the p-map rows, all as base-p digits, most significant first.
pub fn candidate(field: PrimeField, dim: usize, index: u64) -> Result<RestrictedLieAlgebra> {
    let digits = FpVector::from_index(field, table_coordinates(dim), index).entries();
    let mut chunks = digits.chunks(dim.max(1));
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            brackets.push((i, j, FpVector::from_entries(field, chunks.next().unwrap())));
        }
    }
    let pmap = (0..dim)
        .map(|_| FpVector::from_entries(field, chunks.next().unwrap()))
        .collect();
    RestrictedLieAlgebra::new(field, default_names(dim), brackets, pmap)
}

/// Valid algebras of the given shape. Exhaustive mode walks every candidate in index order
/// and needs `p^coordinates <= budget`; sampled mode draws candidates uniformly with a
/// seeded generator until `size` valid ones are found, giving up after `budget` draws.
pub fn enumerate_algebras(
    p: u32,
    dim: usize,
    mode: AuditMode,
    budget: u64,
) -> Result<Vec<RestrictedLieAlgebra>> {
    let field = PrimeField::new(p)?;
    let total = (p as u64).checked_pow(table_coordinates(dim) as u32);
    match mode {
        AuditMode::Exhaustive => {
            let total = total
                .filter(|&t| t <= budget)
                .ok_or(Error::BudgetExceeded {
                    what: "exhaustive enumeration",
                    needed: total.unwrap_or(u64::MAX),
                    cap: budget,
                })?;
            let found: Vec<Option<RestrictedLieAlgebra>> = (0..total)
                .into_par_iter()
                .map(|i| candidate(field, dim, i).map(|l| l.validate().is_ok().then_some(l)))
                .collect::<Result<_>>()?;
            Ok(found.into_iter().flatten().collect())
        }
        AuditMode::Sampled { size, seed } => {
            let total = total.ok_or(Error::CapExceeded {
                what: "candidate table count",
                needed: u64::MAX,
                cap: u64::MAX,
            })?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(size);
            let mut draws = 0u64;
            while out.len() < size {
                if draws >= budget {
                    return Err(Error::BudgetExceeded {
                        what: "sampling attempts",
                        needed: draws + 1,
                        cap: budget,
                    });
                }
                draws += 1;
                let l = candidate(field, dim, rng.gen_range(0..total))?;
                if l.validate().is_ok() {
                    out.push(l);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub algebra: RestrictedLieAlgebra,
    pub structural: bool,
    pub brute: bool,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub p: u32,
    pub dim: usize,
    pub mode: AuditMode,
    pub count: usize,
    pub agreements: usize,
    /// Instances whose brute verdict came from an incomplete lattice; not compared.
    pub inconclusive: usize,
    pub pir_count: usize,
    /// Instances where right and left principality differ.
    pub side_mismatches: usize,
    pub disagreements: Vec<Disagreement>,
    pub elapsed: Duration,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.side_mismatches == 0
    }
}

/// Runs both deciders on every enumerated algebra. `limits.max_elements` doubles as the
/// enumeration budget; sampled mode allows `max(1000 * size, max_elements)` draws.
pub fn audit(p: u32, dim: usize, mode: AuditMode, limits: &Limits) -> Result<AuditReport> {
    let start = Instant::now();
    let budget = match mode {
        AuditMode::Exhaustive => limits.max_elements,
        AuditMode::Sampled { size, .. } => (1000 * size as u64).max(limits.max_elements),
    };
    let algebras = enumerate_algebras(p, dim, mode, budget)?;
    let verdicts: Vec<(bool, bool, bool, bool)> = algebras
        .par_iter()
        .map(|l| {
            let s = structural_decision(l, limits)?;
            let b = brute_decision(l, limits)?;
            let sides_agree = match &b.certificate {
                Certificate::Brute { right, left } => right.principal == left.principal,
                _ => true,
            };
            Ok((s.is_pir, b.is_pir, b.is_exhaustive(), sides_agree))
        })
        .collect::<Result<_>>()?;
    let mut report = AuditReport {
        p,
        dim,
        mode,
        count: algebras.len(),
        agreements: 0,
        inconclusive: 0,
        pir_count: 0,
        side_mismatches: 0,
        disagreements: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for (l, (s, b, exhaustive, sides_agree)) in algebras.into_iter().zip(verdicts) {
        report.side_mismatches += !sides_agree as usize;
        if !exhaustive {
            report.inconclusive += 1;
        } else if s == b {
            report.agreements += 1;
            report.pir_count += s as usize;
        } else {
            report.disagreements.push(Disagreement {
                algebra: l,
                structural: s,
                brute: b,
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, CatalogKind};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn structural_examples() {
        let t = make(CatalogKind::Torus(3), 2).unwrap();
        let v = structural_decision(&t, &lim()).unwrap();
        assert!(v.is_pir);
        let Certificate::Fitting {
            torus, nil_part, ..
        } = &v.certificate
        else {
            panic!("abelian input")
        };
        assert!(torus.is_full() && nil_part.is_zero());
        verify_structural_yes(&t, &v).unwrap();

        let s = make(CatalogKind::StronglyAbelian(2), 2).unwrap();
        assert!(!structural_decision(&s, &lim()).unwrap().is_pir);

        let n = make(CatalogKind::NonAbelian2, 2).unwrap();
        let v = structural_decision(&n, &lim()).unwrap();
        assert!(!v.is_pir);
        assert!(matches!(
            v.certificate,
            Certificate::NonAbelian { left: 0, right: 1 }
        ));
    }

    #[test]
    fn brute_examples() {
        for (kind, yes) in [
            (CatalogKind::Nilcyclic(1), true),
            (CatalogKind::Torus(1), true),
            (CatalogKind::StronglyAbelian(2), false),
        ] {
            let l = make(kind, 2).unwrap();
            let v = brute_decision(&l, &lim()).unwrap();
            assert_eq!(v.is_pir, yes, "{kind}");
            assert!(v.is_exhaustive());
            if !yes {
                let Certificate::Brute { right, .. } = &v.certificate else {
                    unreachable!()
                };
                let a = EnvAlgebra::build(&l, 100).unwrap();
                assert!(
                    verify_brute_no(&a, right.witness.as_ref().unwrap(), Side::Right, 1 << 16)
                        .unwrap()
                );
            }
        }
    }

    #[test]
    fn monotone_sanity() {
        for p in [2, 3] {
            for (a, b) in [(0, 1), (1, 1), (2, 1), (1, 2), (3, 1)] {
                let l = make(CatalogKind::Mixed(a, b), p).unwrap();
                let v = structural_decision(&l, &lim()).unwrap();
                assert!(v.is_pir, "mixed({a},{b}) at p = {p}");
                verify_structural_yes(&l, &v).unwrap();
                let extra = l
                    .direct_sum(&make(CatalogKind::Nilcyclic(1), p).unwrap())
                    .unwrap();
                assert!(!structural_decision(&extra, &lim()).unwrap().is_pir);
            }
        }
    }

    #[test]
    fn ordinary_env() {
        assert!(ordinary_env_decision(0));
        assert!(ordinary_env_decision(1));
        assert!(!ordinary_env_decision(2));
        assert!(!ordinary_env_decision(7));
    }

    #[test]
    fn enumeration_counts() {
        let one = enumerate_algebras(2, 1, AuditMode::Exhaustive, 1 << 16).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(table_coordinates(2), 6);
        assert_eq!(table_coordinates(3), 18);
        assert!(matches!(
            enumerate_algebras(2, 3, AuditMode::Exhaustive, 1 << 16),
            Err(Error::BudgetExceeded { .. })
        ));
        let s = AuditMode::Sampled { size: 5, seed: 42 };
        let a = enumerate_algebras(2, 3, s, 10_000).unwrap();
        let b = enumerate_algebras(2, 3, s, 10_000).unwrap();
        assert_eq!(a.len(), 5);
        assert!(a.iter().zip(&b).all(|(x, y)| x.same_tables(y)));
        assert!(a.iter().all(|l| l.validate().is_ok()));
    }

    #[test]
    fn audit_dim1() {
        let r = audit(2, 1, AuditMode::Exhaustive, &lim()).unwrap();
        assert_eq!((r.count, r.agreements, r.pir_count), (2, 2, 2));
        assert!(r.passed());
    }
}
