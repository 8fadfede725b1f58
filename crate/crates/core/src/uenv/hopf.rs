//! Integrals, annihilators, the free-module decomposition over a subalgebra, and the
//! nilradical of a commutative `u(L)`.

use crate::error::{Error, Result};
use crate::gfp::{FpVector, Matrix, Subspace};

use super::EnvAlgebra;

/// Left and right integrals of `u(L)`; each is a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace {
    pub left: Subspace,
    pub right: Subspace,
}

/// Outcome of [`EnvAlgebra::free_module_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleReport {
    /// True iff the products `u * w` (u in the PBW basis of `u(H)`, w a PBW monomial in a
    /// complement of `H`) form a basis of `u(L)`.
    pub free: bool,
    /// Number of complement monomials, `p^(dim L - dim H)`.
    pub rank: usize,
    /// Dimension of the image of `u(H)` in `u(L)`.
    pub sub_dim: usize,
}

impl EnvAlgebra {
    fn stacked_kernel(&self, maps: Vec<Matrix>) -> Subspace {
        Matrix::vstack(self.field(), self.dim(), &maps)
            .expect("square blocks")
            .kernel()
    }

    /// Left integrals solve `x_i t = 0` for every generator (generators have counit zero
    /// and generate ω); right integrals solve `t x_i = 0`.
    pub fn integrals(&self) -> Result<IntegralSpace> {
        let d = self.lie().dim();
        let gens: Vec<FpVector> = (0..d)
            .map(|i| self.embed_lie(&self.lie().basis_vector(i)))
            .collect();
        let left = self.stacked_kernel(gens.iter().map(|g| self.left_mul_matrix(g)).collect());
        let right = self.stacked_kernel(gens.iter().map(|g| self.right_mul_matrix(g)).collect());
        if left.dim() != 1 || right.dim() != 1 {
            return Err(Error::Assertion(format!(
                "integral spaces have dimensions {} (left) and {} (right), expected 1",
                left.dim(),
                right.dim()
            )));
        }
        Ok(IntegralSpace { left, right })
    }

    /// `{ v : s v = 0 for all s in S }`.
    pub fn right_annihilator(&self, s: &[FpVector]) -> Subspace {
        self.stacked_kernel(s.iter().map(|x| self.left_mul_matrix(x)).collect())
    }

    /// `{ v : v s = 0 for all s in S }`.
    pub fn left_annihilator(&self, s: &[FpVector]) -> Subspace {
        self.stacked_kernel(s.iter().map(|x| self.right_mul_matrix(x)).collect())
    }

    /// The right ideal `t u(L)` spanned by `t b_m` over all monomials.
    pub fn right_multiples(&self, t: &FpVector) -> Subspace {
        Subspace::span(
            self.field(),
            self.dim(),
            (0..self.dim())
                .map(|m| self.mul(t, &FpVector::unit(self.field(), self.dim(), m)))
                .collect(),
        )
    }

    /// Checks `u(L) = ⊕ u(H) w` over the PBW monomials `w` in the unit vectors outside
    /// the pivots of `H`.
    pub fn free_module_check(&self, h: &Subspace) -> Result<FreeModuleReport> {
        let (_, sub_basis) = self.embed_subalgebra(h)?;
        let sub_dim = Subspace::span(self.field(), self.dim(), sub_basis.clone()).dim();
        let comp = h.complement_columns();
        let p = self.lie().p() as u64;
        let rank = p.pow(comp.len() as u32) as usize;
        let comp_gens: Vec<FpVector> = comp
            .iter()
            .map(|&c| self.embed_lie(&self.lie().basis_vector(c)))
            .collect();
        let words: Vec<FpVector> = (0..rank as u64)
            .map(|idx| {
                let exps = FpVector::from_index(self.field(), comp.len(), idx).entries();
                exps.iter()
                    .zip(&comp_gens)
                    .fold(self.one_dense(), |acc, (&a, g)| {
                        self.mul(&acc, &self.power(g, a as u64))
                    })
            })
            .collect();
        let products: Vec<FpVector> = sub_basis
            .iter()
            .flat_map(|u| words.iter().map(move |w| (u, w)))
            .map(|(u, w)| self.mul(u, w))
            .collect();
        let n = products.len();
        let span = Subspace::span(self.field(), self.dim(), products);
        Ok(FreeModuleReport {
            free: n == self.dim() && span.is_full(),
            rank,
            sub_dim,
        })
    }

    /// Nilradical of a commutative `u(L)`: the stable kernel of the Frobenius `v -> v^p`,
    /// which is F_p-linear in a commutative algebra of characteristic p.
    pub fn commutative_radical(&self) -> Result<Subspace> {
        if !self.is_commutative() {
            return Err(Error::NonCommutative("nilradical via Frobenius"));
        }
        let p = self.lie().p() as u64;
        let cols: Vec<FpVector> = (0..self.dim())
            .map(|b| self.power(&FpVector::unit(self.field(), self.dim(), b), p))
            .collect();
        let frob = Matrix::from_columns(self.field(), self.dim(), &cols)?;
        Ok(frob.pow(self.dim() as u64).kernel())
    }
}
