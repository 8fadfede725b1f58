use std::fmt;

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::subspace::{row_reduce, Subspace};
use super::vector::FpVector;

/// A dense matrix over F_p acting on column vectors: `apply(v) = M v`.
///
/// Stored as a list of rows so that row reduction, and hence kernels, are cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    cols: usize,
    rows: Vec<FpVector>,
}

impl Matrix {
    pub fn zero(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            cols: ncols,
            rows: vec![FpVector::zero(field, ncols); nrows],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Matrix {
            field,
            cols: n,
            rows: (0..n).map(|i| FpVector::unit(field, n, i)).collect(),
        }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: Vec<FpVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            field,
            cols: ncols,
            rows,
        })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: PrimeField, nrows: usize, columns: &[FpVector]) -> Result<Self> {
        let mut m = Matrix::zero(field, nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch {
                    expected: nrows,
                    found: col.len(),
                });
            }
            for (i, x) in col.nonzero() {
                m.rows[i].set(j, x);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.rows[i].set(j, v);
    }

    pub fn column(&self, j: usize) -> FpVector {
        let mut c = FpVector::zero(self.field, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            c.set(i, r.get(j));
        }
        c
    }

    pub fn transpose(&self) -> Matrix {
        let cols: Vec<FpVector> = self.rows.clone();
        Matrix::from_columns(self.field, self.cols, &cols).expect("transpose shape")
    }

    pub fn apply(&self, v: &FpVector) -> FpVector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = FpVector::zero(self.field, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = FpVector::zero(self.field, other.cols);
                for (k, c) in r.nonzero() {
                    acc.add_scaled(&other.rows[k], c);
                }
                acc
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            cols: other.cols,
            rows,
        })
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.nrows(), self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.cols);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("square");
            }
        }
        acc
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        let mut m = self.clone();
        for (a, b) in m.rows.iter_mut().zip(&other.rows) {
            a.add_assign(b);
        }
        m
    }

    pub fn scaled(&self, c: u8) -> Matrix {
        Matrix {
            field: self.field,
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.scaled(c)).collect(),
        }
    }

    /// Stacks the rows of several matrices with the same number of columns.
    pub fn vstack(field: PrimeField, ncols: usize, blocks: &[Matrix]) -> Result<Matrix> {
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: b.cols,
                });
            }
            rows.extend(b.rows.iter().cloned());
        }
        Ok(Matrix {
            field,
            cols: ncols,
            rows,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        row_reduce(self.field, self.cols, &mut rows).len()
    }

    /// `{ v : M v = 0 }` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.rows.clone();
        let pivots = row_reduce(self.field, self.cols, &mut rows);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let basis = (0..self.cols).filter(|&c| !is_pivot[c]).map(|free| {
            let mut v = FpVector::unit(self.field, self.cols, free);
            for (row, &pc) in rows.iter().zip(&pivots) {
                v.set(pc, self.field.neg(row.get(free)));
            }
            v
        });
        Subspace::span(self.field, self.cols, basis.collect())
    }

    /// The column space `{ M v }`.
    pub fn image(&self) -> Subspace {
        let cols: Vec<FpVector> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(self.field, self.nrows(), cols)
    }

    /// The image of a subspace of the domain.
    pub fn image_of(&self, s: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.nrows(),
            s.basis().iter().map(|v| self.apply(v)).collect(),
        )
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(Matrix::identity(f(5), 4).kernel().is_zero());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zero(f(2), 4, 4).kernel();
        assert_eq!(k, Subspace::full(f(2), 4));
    }

    #[test]
    fn kernel_of_jordan_block() {
        // N e_0 = e_1, N e_1 = e_2, N e_2 = 0.
        let cols = vec![
            FpVector::unit(f(3), 3, 1),
            FpVector::unit(f(3), 3, 2),
            FpVector::zero(f(3), 3),
        ];
        let n = Matrix::from_columns(f(3), 3, &cols).unwrap();
        let k = n.kernel();
        assert_eq!(k.basis(), &[FpVector::unit(f(3), 3, 2)]);
        assert!(n.pow(3).is_zero());
        assert!(!n.pow(2).is_zero());
    }

    #[test]
    fn apply_and_transpose_agree() {
        let m = Matrix::from_rows(
            f(3),
            3,
            vec![
                FpVector::from_entries(f(3), &[1, 2, 0]),
                FpVector::from_entries(f(3), &[0, 1, 1]),
            ],
        )
        .unwrap();
        let v = FpVector::from_entries(f(3), &[1, 1, 1]);
        assert_eq!(m.apply(&v).entries(), vec![0, 2]);
        assert_eq!(m.transpose().column(0), m.rows()[0]);
        assert_eq!(m.kernel().dim() + m.rank(), 3);
    }
}
