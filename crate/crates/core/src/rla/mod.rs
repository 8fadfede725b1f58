//! Finite-dimensional restricted Lie algebras over F_p given by structure constants.
//!
//! An algebra is stored as the bracket of every pair of basis vectors together with the
//! p-th power `e_i^[p]` of every basis vector. Elements are plain coordinate vectors
//! ([`FpVector`]s of length `dim`). The p-map on arbitrary elements is recovered from the
//! basis values through Jacobson's formula, see [`RestrictedLieAlgebra::pth_power`].

mod abelian;
mod structure;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gfp::{FpVector, Matrix, PrimeField, Subspace};

pub use abelian::CyclicTest;
pub use structure::SubalgebraReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedLieAlgebra {
    field: PrimeField,
    names: Vec<String>,
    /// Full antisymmetric table, `bracket[i * dim + j] = [e_i, e_j]`.
    bracket: Vec<FpVector>,
    pmap: Vec<FpVector>,
}

/// One failed restricted Lie algebra axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The Jacobi identity fails on the basis triple.
    Jacobi { i: usize, j: usize, k: usize },
    /// `ad(e_i^[p]) != (ad e_i)^p`.
    Restriction { i: usize },
}

/// Outcome of [`RestrictedLieAlgebra::validate`]; empty means every axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    names: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let n = |i: usize| self.names.get(i).map(String::as_str).unwrap_or("?");
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| match *v {
                Violation::Jacobi { i, j, k } => {
                    format!("Jacobi identity fails on ({}, {}, {})", n(i), n(j), n(k))
                }
                Violation::Restriction { i } => {
                    format!("ad({0}^[p]) != (ad {0})^p", n(i))
                }
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl RestrictedLieAlgebra {
    /// Assembles an algebra from its tables without checking the axioms.
    ///
    /// `brackets` lists `(i, j, [e_i, e_j])` for `i < j`; omitted pairs are zero.
    /// Shape problems (unknown indices, wrong lengths, repeated names or pairs) are
    /// reported as [`Error::Malformed`]; call [`validate`](Self::validate) for the axioms.
    pub fn new<I>(
        field: PrimeField,
        names: Vec<String>,
        brackets: I,
        pmap: Vec<FpVector>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, FpVector)>,
    {
        let dim = names.len();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Malformed(format!("duplicate basis name {n:?}")));
            }
        }
        if pmap.len() != dim {
            return Err(Error::Malformed(format!(
                "p-map table has {} entries for a {dim}-dimensional basis",
                pmap.len()
            )));
        }
        for (i, v) in pmap.iter().enumerate() {
            if v.len() != dim || v.field() != field {
                return Err(Error::Malformed(format!(
                    "p-map of basis vector {i} has length {} instead of {dim}",
                    v.len()
                )));
            }
        }
        let zero = FpVector::zero(field, dim);
        let mut bracket = vec![zero; dim * dim];
        let mut pairs = std::collections::HashSet::new();
        for (i, j, v) in brackets {
            if i >= j || j >= dim {
                return Err(Error::Malformed(format!(
                    "bracket entry ({i}, {j}) must satisfy left < right < {dim}"
                )));
            }
            if !pairs.insert((i, j)) {
                return Err(Error::Malformed(format!("bracket ({i}, {j}) given twice")));
            }
            if v.len() != dim || v.field() != field {
                return Err(Error::Malformed(format!(
                    "bracket ({i}, {j}) has length {} instead of {dim}",
                    v.len()
                )));
            }
            bracket[j * dim + i] = v.scaled(field.neg(1));
            bracket[i * dim + j] = v;
        }
        Ok(RestrictedLieAlgebra {
            field,
            names,
            bracket,
            pmap,
        })
    }

    /// The zero algebra over `field`.
    pub fn zero(field: PrimeField) -> Self {
        RestrictedLieAlgebra {
            field,
            names: Vec::new(),
            bracket: Vec::new(),
            pmap: Vec::new(),
        }
    }

    /// [`new`](Self::new) followed by [`validate`](Self::validate); axiom failures become
    /// [`Error::Validation`].
    pub fn validated<I>(
        field: PrimeField,
        names: Vec<String>,
        brackets: I,
        pmap: Vec<FpVector>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, FpVector)>,
    {
        Self::new(field, names, brackets, pmap)?.checked()
    }

    pub fn checked(self) -> Result<Self> {
        let report = self.validate();
        if report.is_ok() {
            Ok(self)
        } else {
            Err(Error::Validation(report))
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.field.p()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_vector(&self, i: usize) -> FpVector {
        FpVector::unit(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> FpVector {
        FpVector::zero(self.field, self.dim())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// `[e_i, e_j]`.
    #[inline]
    pub fn basis_bracket(&self, i: usize, j: usize) -> &FpVector {
        &self.bracket[i * self.dim() + j]
    }

    /// `e_i^[p]`.
    #[inline]
    pub fn basis_pth_power(&self, i: usize) -> &FpVector {
        &self.pmap[i]
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in order.
    pub fn upper_brackets(&self) -> impl Iterator<Item = (usize, usize, &FpVector)> + '_ {
        let d = self.dim();
        (0..d)
            .flat_map(move |i| (i + 1..d).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.basis_bracket(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
    }

    pub fn bracket(&self, x: &FpVector, y: &FpVector) -> FpVector {
        let d = self.dim();
        let mut out = self.zero_vector();
        for (i, a) in x.nonzero() {
            for (j, b) in y.nonzero() {
                if i != j {
                    out.add_scaled(&self.bracket[i * d + j], self.field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.is_zero())
    }

    /// The matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &FpVector) -> Matrix {
        let cols: Vec<FpVector> = (0..self.dim())
            .map(|j| self.bracket(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("square")
    }

    /// The matrix whose columns are the basis p-th powers. On an abelian algebra over F_p
    /// this is the p-map itself.
    pub fn pmap_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.dim(), &self.pmap).expect("square")
    }

    /// The Jacobson correction `sum_i s_i(a, b)` in
    /// `(a + b)^[p] = a^[p] + b^[p] + sum_i s_i(a, b)`, where `i s_i(a, b)` is the
    /// coefficient of `t^(i-1)` in `ad(t a + b)^(p-1) (a)`.
    fn jacobson_correction(&self, a: &FpVector, b: &FpVector) -> FpVector {
        let p = self.p() as usize;
        let f = self.field;
        // coeffs[k] is the coefficient of t^k.
        let mut coeffs = vec![a.clone()];
        for _ in 0..p - 1 {
            let mut next = vec![self.zero_vector(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k].add_assign(&self.bracket(b, c));
                next[k + 1].add_assign(&self.bracket(a, c));
            }
            coeffs = next;
        }
        let mut out = self.zero_vector();
        for i in 1..p {
            out.add_scaled(&coeffs[i - 1], f.inv(i as u8));
        }
        out
    }

    /// `x^[p]`, folding Jacobson's formula over the basis expansion of `x` from left to
    /// right. Over F_p scalars pass through the p-map unchanged: `(c x)^[p] = c x^[p]`.
    pub fn pth_power(&self, x: &FpVector) -> FpVector {
        let mut acc = self.zero_vector();
        let mut power = self.zero_vector();
        for (i, c) in x.nonzero() {
            let term = self.basis_vector(i).scaled(c);
            if !acc.is_zero() {
                power.add_assign(&self.jacobson_correction(&acc, &term));
            }
            power.add_scaled(&self.pmap[i], c);
            acc.add_assign(&term);
        }
        power
    }

    /// `x^[p]^n`.
    pub fn iterated_pth_power(&self, x: &FpVector, n: usize) -> FpVector {
        (0..n).fold(x.clone(), |y, _| self.pth_power(&y))
    }

    /// Checks the Jacobi identity on every basis triple and `ad(e_i^[p]) = (ad e_i)^p` for
    /// every basis vector; by Jacobson's theorem these suffice.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (ei, ej, ek) = (
                        self.basis_vector(i),
                        self.basis_vector(j),
                        self.basis_vector(k),
                    );
                    let mut s = self.bracket(&ei, self.basis_bracket(j, k));
                    s.add_assign(&self.bracket(&ej, self.basis_bracket(k, i)));
                    s.add_assign(&self.bracket(&ek, self.basis_bracket(i, j)));
                    if !s.is_zero() {
                        violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            let lhs = self.ad(&self.pmap[i]);
            let rhs = self.ad(&self.basis_vector(i)).pow(self.p() as u64);
            if lhs != rhs {
                violations.push(Violation::Restriction { i });
            }
        }
        ValidationReport {
            violations,
            names: self.names.clone(),
        }
    }

    /// Tables equal, ignoring basis names.
    pub fn same_tables(&self, other: &RestrictedLieAlgebra) -> bool {
        self.field == other.field && self.bracket == other.bracket && self.pmap == other.pmap
    }

    /// Fails with a witness unless `s` is a restricted ideal.
    pub fn check_restricted_ideal(&self, s: &Subspace) -> Result<()> {
        for b in s.basis() {
            for j in 0..self.dim() {
                let w = self.bracket(&self.basis_vector(j), b);
                if !s.contains(&w) {
                    return Err(Error::NotRestrictedIdeal(format!(
                        "[{}, {:?}] = {:?} leaves the subspace",
                        self.names[j], b, w
                    )));
                }
            }
            let w = self.pth_power(b);
            if !s.contains(&w) {
                return Err(Error::NotRestrictedIdeal(format!(
                    "{b:?}^[p] = {w:?} leaves the subspace"
                )));
            }
        }
        Ok(())
    }

    /// Fails with a witness unless `s` is a restricted subalgebra.
    pub fn check_restricted_subalgebra(&self, s: &Subspace) -> Result<()> {
        let basis = s.basis();
        for (a, x) in basis.iter().enumerate() {
            for y in &basis[a + 1..] {
                let w = self.bracket(x, y);
                if !s.contains(&w) {
                    return Err(Error::NotRestrictedSubalgebra(format!(
                        "[{x:?}, {y:?}] = {w:?} leaves the subspace"
                    )));
                }
            }
            let w = self.pth_power(x);
            if !s.contains(&w) {
                return Err(Error::NotRestrictedSubalgebra(format!(
                    "{x:?}^[p] = {w:?} leaves the subspace"
                )));
            }
        }
        Ok(())
    }

    /// The restricted subalgebra `s` as an algebra in its own right, on the canonical basis
    /// of `s`. Basis vectors that are unit vectors keep their names.
    pub fn subalgebra(&self, s: &Subspace) -> Result<RestrictedLieAlgebra> {
        self.check_restricted_subalgebra(s)?;
        let basis = s.basis();
        let coords =
            |v: &FpVector| FpVector::from_entries(self.field, &s.coordinates(v).expect("closed"));
        let names = basis
            .iter()
            .enumerate()
            .map(|(r, b)| match b.nonzero().collect::<Vec<_>>().as_slice() {
                [(c, 1)] => self.names[*c].clone(),
                _ => format!("h{}", r + 1),
            })
            .collect::<Vec<_>>();
        let names = dedup_names(names);
        let mut brackets = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                brackets.push((a, b, coords(&self.bracket(&basis[a], &basis[b]))));
            }
        }
        let pmap = basis.iter().map(|b| coords(&self.pth_power(b))).collect();
        RestrictedLieAlgebra::new(self.field, names, brackets, pmap)
    }

    /// Image of `v` in `L / ideal`, in the coordinates used by [`quotient`](Self::quotient):
    /// the entries at the non-pivot columns of the ideal after reduction.
    pub fn project(ideal: &Subspace, v: &FpVector) -> FpVector {
        let r = ideal.reduce(v);
        let cols = ideal.complement_columns();
        let entries: Vec<u8> = cols.iter().map(|&c| r.get(c)).collect();
        FpVector::from_entries(v.field(), &entries)
    }

    /// `L / I` on the basis given by the unit vectors outside the pivots of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<RestrictedLieAlgebra> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: ideal.ambient_dim(),
            });
        }
        self.check_restricted_ideal(ideal)?;
        let cols = ideal.complement_columns();
        let names = cols.iter().map(|&c| self.names[c].clone()).collect();
        let mut brackets = Vec::new();
        for (a, &ca) in cols.iter().enumerate() {
            for (b, &cb) in cols.iter().enumerate().skip(a + 1) {
                brackets.push((a, b, Self::project(ideal, self.basis_bracket(ca, cb))));
            }
        }
        let pmap = cols
            .iter()
            .map(|&c| Self::project(ideal, &self.pmap[c]))
            .collect();
        RestrictedLieAlgebra::new(self.field, names, brackets, pmap)?.checked()
    }

    /// `L1 ⊕ L2` with zero cross brackets. Clashing names from `other` get a `'` suffix.
    pub fn direct_sum(&self, other: &RestrictedLieAlgebra) -> Result<RestrictedLieAlgebra> {
        if self.field != other.field {
            return Err(Error::Field(format!(
                "direct sum of algebras over {} and {}",
                self.field, other.field
            )));
        }
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 + d2;
        let embed = |v: &FpVector, offset: usize| {
            let mut w = FpVector::zero(self.field, d);
            for (i, c) in v.nonzero() {
                w.set(offset + i, c);
            }
            w
        };
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let names = dedup_names(names);
        let brackets: Vec<(usize, usize, FpVector)> = self
            .upper_brackets()
            .map(|(i, j, v)| (i, j, embed(v, 0)))
            .chain(
                other
                    .upper_brackets()
                    .map(|(i, j, v)| (i + d1, j + d1, embed(v, d1))),
            )
            .collect();
        let pmap = self
            .pmap
            .iter()
            .map(|v| embed(v, 0))
            .chain(other.pmap.iter().map(|v| embed(v, d1)))
            .collect();
        RestrictedLieAlgebra::new(self.field, names, brackets, pmap)?.checked()
    }

    /// Structure constants as a nested map, for reports.
    pub fn bracket_table(&self) -> BTreeMap<(usize, usize), Vec<u8>> {
        self.upper_brackets()
            .map(|(i, j, v)| ((i, j), v.entries()))
            .collect()
    }
}

fn dedup_names(names: Vec<String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(names.len());
    for mut n in names {
        while out.contains(&n) {
            n.push('\'');
        }
        out.push(n);
    }
    out
}
