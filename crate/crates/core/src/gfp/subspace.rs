use crate::error::{Error, Result};

use super::field::PrimeField;
use super::vector::FpVector;

/// Row-reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each surviving row (strictly increasing).
pub(crate) fn row_reduce(field: PrimeField, ncols: usize, rows: &mut Vec<FpVector>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(r) = (rank..rows.len()).find(|&r| rows[r].get(col) != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let lead = rows[rank].get(col);
        if lead != 1 {
            rows[rank].scale(field.inv(lead));
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank {
                let c = row.get(col);
                if c != 0 {
                    row.add_scaled(&pivot_row, field.neg(c));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// A subspace of F_p^n in canonical form: its basis is the reduced row echelon form of any
/// spanning set. Two values compare equal exactly when they are the same subspace, so a
/// `Subspace` can be used directly as a hash key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<FpVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonical subspace spanned by `rows`.
    pub fn rref<I>(field: PrimeField, ambient: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = FpVector>,
    {
        let mut rows: Vec<FpVector> = rows.into_iter().collect();
        if let Some(bad) = rows
            .iter()
            .find(|r| r.len() != ambient || r.field() != field)
        {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        let pivots = row_reduce(field, ambient, &mut rows);
        Ok(Subspace {
            field,
            ambient,
            rows,
            pivots,
        })
    }

    /// Like [`Subspace::rref`] for callers that already guarantee matching lengths.
    pub(crate) fn span(field: PrimeField, ambient: usize, rows: Vec<FpVector>) -> Self {
        Self::rref(field, ambient, rows).expect("span of vectors with mismatched lengths")
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient)
                .map(|i| FpVector::unit(field, ambient, i))
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot column; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &FpVector) -> FpVector {
        let mut r = v.clone();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = r.get(c);
            if x != 0 {
                r.add_scaled(row, self.field.neg(x));
            }
        }
        r
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        v.len() == self.ambient && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &FpVector) -> Option<Vec<u8>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&c| v.get(c)).collect())
    }

    /// The combination `sum_r coeffs[r] * basis[r]`.
    pub fn combine(&self, coeffs: &[u8]) -> FpVector {
        let mut v = FpVector::zero(self.field, self.ambient);
        for (row, &c) in self.rows.iter().zip(coeffs) {
            v.add_scaled(row, c);
        }
        v
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        Subspace::rref(
            self.field,
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    /// Adds the span of `extra` to the subspace.
    pub fn extend<'a, I>(&self, extra: I) -> Subspace
    where
        I: IntoIterator<Item = &'a FpVector>,
    {
        let mut rows = self.rows.clone();
        rows.extend(extra.into_iter().cloned());
        Subspace::span(self.field, self.ambient, rows)
    }

    /// Intersection by the Zassenhaus construction: reduce the rows `[a | a]`, `[b | 0]` and
    /// read the intersection off the rows whose left half vanishes.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let n = self.ambient;
        let zero = FpVector::zero(self.field, n);
        let mut rows: Vec<FpVector> = self
            .rows
            .iter()
            .map(|a| a.concat(a))
            .chain(other.rows.iter().map(|b| b.concat(&zero)))
            .collect();
        let pivots = row_reduce(self.field, 2 * n, &mut rows);
        let meet = rows
            .iter()
            .zip(&pivots)
            .filter(|(_, &c)| c >= n)
            .map(|(r, _)| r.slice(n, 2 * n));
        Subspace::rref(self.field, n, meet)
    }

    /// Non-pivot columns; the unit vectors there span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Number of elements, `p^dim`, if it fits in a `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        (self.field.p() as u64).checked_pow(self.dim() as u32)
    }

    /// Element number `index` in lexicographic order of coordinates. Because the basis is
    /// in echelon form this is also lexicographic order of the ambient entries.
    pub fn element(&self, index: u64) -> FpVector {
        let coeffs = FpVector::from_index(self.field, self.dim(), index).entries();
        self.combine(&coeffs)
    }

    /// Every element, in lexicographic order. Panics if `p^dim` overflows.
    pub fn elements(&self) -> impl Iterator<Item = FpVector> + '_ {
        let n = self.cardinality().expect("subspace too large to enumerate");
        (0..n).map(move |i| self.element(i))
    }

    /// One representative per line: nonzero elements whose leading coefficient is 1,
    /// in lexicographic order.
    pub fn monic_elements(&self) -> impl Iterator<Item = FpVector> + '_ {
        self.elements()
            .filter(|v| matches!(v.first_nonzero(), Some((_, 1))))
    }

    /// Every subspace of F_p^n, grouped by dimension and then by pivot pattern.
    pub fn all_subspaces(field: PrimeField, n: usize) -> Vec<Subspace> {
        let mut out = Vec::new();
        for k in 0..=n {
            for pivots in combinations(n, k) {
                let free: Vec<(usize, usize)> = pivots
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &pc)| {
                        let pivots = &pivots;
                        (pc + 1..n)
                            .filter(move |c| !pivots.contains(c))
                            .map(move |c| (r, c))
                    })
                    .collect();
                let count = (field.p() as u64).pow(free.len() as u32);
                for idx in 0..count {
                    let vals = FpVector::from_index(field, free.len(), idx);
                    let mut rows: Vec<FpVector> = pivots
                        .iter()
                        .map(|&c| FpVector::unit(field, n, c))
                        .collect();
                    for (slot, &(r, c)) in free.iter().enumerate() {
                        rows[r].set(c, vals.get(slot));
                    }
                    out.push(Subspace {
                        field,
                        ambient: n,
                        rows,
                        pivots: pivots.clone(),
                    });
                }
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
