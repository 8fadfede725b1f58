//! The restricted enveloping algebra `u(L)` of a restricted Lie algebra over F_p.
//!
//! The basis is the set of PBW monomials `x_1^a_1 ... x_n^a_n` with `0 <= a_i < p`,
//! indexed in lexicographic order of the exponent tuple (the exponent of `x_1` is the
//! most significant base-p digit). Index 0 is the identity and the generator `x_i` sits at
//! index `p^(n - 1 - i)`. Products are computed by straightening words in the generators.
//!
//! Elements are handled as dense [`FpVector`]s of length `p^n` by the linear-algebra
//! routines, and as sparse [`EnvElement`]s at the API surface.

mod hopf;
mod straighten;

use std::collections::BTreeMap;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gfp::{FpVector, Matrix, PrimeField, Subspace};
use crate::rla::RestrictedLieAlgebra;

pub use hopf::{FreeModuleReport, IntegralSpace};
use straighten::{Sparse, Straightener};

/// Largest algebra for which the full basis product table is cached.
pub const TABLE_CACHE_LIMIT: usize = 512;

/// A sparse element of some `u(L)`: `(monomial index, nonzero coefficient)` pairs in
/// increasing index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnvElement {
    parent: u64,
    size: usize,
    coeffs: Vec<(usize, u8)>,
}

impl EnvElement {
    pub fn coeffs(&self) -> &[(usize, u8)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, index: usize) -> u8 {
        self.coeffs
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|k| self.coeffs[k].1)
            .unwrap_or(0)
    }
}

/// Right and left multiplication by each basis monomial, as dense row tables:
/// `right[m][a] = b_a * b_m` and `left[m][a] = b_m * b_a`.
pub(crate) struct Actions {
    pub right: Vec<Vec<FpVector>>,
    pub left: Vec<Vec<FpVector>>,
}

pub struct EnvAlgebra {
    lie: RestrictedLieAlgebra,
    size: usize,
    fingerprint: u64,
    table: OnceLock<Vec<Vec<Sparse>>>,
    actions: OnceLock<Actions>,
}

impl std::fmt::Debug for EnvAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnvAlgebra")
            .field("p", &self.lie.p())
            .field("dim_lie", &self.lie.dim())
            .field("dim_env", &self.size)
            .finish()
    }
}

impl EnvAlgebra {
    /// Builds `u(L)`; refuses when `p^dim L` exceeds `max_env_dim`.
    pub fn build(lie: &RestrictedLieAlgebra, max_env_dim: usize) -> Result<Self> {
        let size = (lie.p() as u64)
            .checked_pow(lie.dim() as u32)
            .filter(|&s| s <= max_env_dim as u64)
            .ok_or(Error::CapExceeded {
                what: "enveloping algebra dimension",
                needed: (lie.p() as u64).saturating_pow(lie.dim() as u32),
                cap: max_env_dim as u64,
            })? as usize;
        let mut h = DefaultHasher::new();
        lie.hash(&mut h);
        Ok(EnvAlgebra {
            lie: lie.clone(),
            size,
            fingerprint: h.finish(),
            table: OnceLock::new(),
            actions: OnceLock::new(),
        })
    }

    pub fn lie(&self) -> &RestrictedLieAlgebra {
        &self.lie
    }

    pub fn field(&self) -> PrimeField {
        self.lie.field()
    }

    /// `dim u(L) = p^dim L`.
    pub fn dim(&self) -> usize {
        self.size
    }

    /// Exponent tuple of a monomial index.
    pub fn exponents(&self, index: usize) -> Vec<u8> {
        FpVector::from_index(self.field(), self.lie.dim(), index as u64).entries()
    }

    pub fn monomial_index(&self, exps: &[u8]) -> usize {
        let p = self.lie.p() as usize;
        exps.iter().fold(0, |acc, &e| acc * p + e as usize)
    }

    /// Index of the generator `x_i`.
    pub fn generator_index(&self, i: usize) -> usize {
        (self.lie.p() as usize).pow((self.lie.dim() - 1 - i) as u32)
    }

    /// The monomial as a word in the generators: `x_1` repeated `a_1` times, and so on.
    pub fn word(&self, index: usize) -> Vec<u8> {
        self.exponents(index)
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as u8, a as usize))
            .collect()
    }

    /// Human-readable monomial, e.g. `x^2 y`.
    pub fn monomial_name(&self, index: usize) -> String {
        let parts: Vec<String> = self
            .exponents(index)
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let n = &self.lie.names()[i];
                if a == 1 {
                    n.clone()
                } else {
                    format!("{n}^{a}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    fn zero_dense(&self) -> FpVector {
        FpVector::zero(self.field(), self.size)
    }

    pub fn one_dense(&self) -> FpVector {
        FpVector::unit(self.field(), self.size, 0)
    }

    /// The image of `x in L` among the degree-one monomials.
    pub fn embed_lie(&self, x: &FpVector) -> FpVector {
        let mut v = self.zero_dense();
        for (i, c) in x.nonzero() {
            v.set(self.generator_index(i), c);
        }
        v
    }

    fn to_sparse(&self, v: &FpVector) -> EnvElement {
        EnvElement {
            parent: self.fingerprint,
            size: self.size,
            coeffs: v.nonzero().collect(),
        }
    }

    pub fn element(&self, v: &FpVector) -> Result<EnvElement> {
        if v.len() != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: v.len(),
            });
        }
        Ok(self.to_sparse(v))
    }

    pub fn to_dense(&self, u: &EnvElement) -> Result<FpVector> {
        self.check_parent(u)?;
        let mut v = self.zero_dense();
        for &(i, c) in &u.coeffs {
            v.set(i, c);
        }
        Ok(v)
    }

    fn check_parent(&self, u: &EnvElement) -> Result<()> {
        if u.parent != self.fingerprint || u.size != self.size {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn one(&self) -> EnvElement {
        self.to_sparse(&self.one_dense())
    }

    pub fn generator(&self, i: usize) -> EnvElement {
        self.to_sparse(&FpVector::unit(
            self.field(),
            self.size,
            self.generator_index(i),
        ))
    }

    pub fn monomial(&self, index: usize) -> EnvElement {
        self.to_sparse(&FpVector::unit(self.field(), self.size, index))
    }

    fn sparse_to_dense(&self, s: &Sparse) -> FpVector {
        let mut v = self.zero_dense();
        for (&i, &c) in s {
            v.set(i, c);
        }
        v
    }

    /// Normal form of a word in the generators (indices into the Lie basis).
    pub fn straighten(&self, word: &[usize]) -> Result<EnvElement> {
        if let Some(&bad) = word.iter().find(|&&g| g >= self.lie.dim()) {
            return Err(Error::DimensionMismatch {
                expected: self.lie.dim(),
                found: bad,
            });
        }
        let w: Vec<u8> = word.iter().map(|&g| g as u8).collect();
        let nf = Straightener::new(&self.lie).normal_form(&w);
        Ok(self.to_sparse(&self.sparse_to_dense(&nf)))
    }

    fn table(&self) -> Option<&Vec<Vec<Sparse>>> {
        if self.size > TABLE_CACHE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let mut st = Straightener::new(&self.lie);
            let words: Vec<Vec<u8>> = (0..self.size).map(|i| self.word(i)).collect();
            words
                .iter()
                .map(|a| {
                    words
                        .iter()
                        .map(|b| {
                            let mut w = a.clone();
                            w.extend_from_slice(b);
                            st.normal_form(&w)
                        })
                        .collect()
                })
                .collect()
        }))
    }

    /// Product of two basis monomials.
    pub fn basis_product(&self, a: usize, b: usize) -> FpVector {
        match self.table() {
            Some(t) => self.sparse_to_dense(&t[a][b]),
            None => {
                let mut w = self.word(a);
                w.extend(self.word(b));
                self.sparse_to_dense(&Straightener::new(&self.lie).normal_form(&w))
            }
        }
    }

    /// Product of dense elements.
    pub fn mul(&self, u: &FpVector, v: &FpVector) -> FpVector {
        let f = self.field();
        let mut out = self.zero_dense();
        let table = self.table();
        let mut st = Straightener::new(&self.lie);
        for (a, ua) in u.nonzero() {
            for (b, vb) in v.nonzero() {
                let c = f.mul(ua, vb);
                let fresh;
                let prod = match table {
                    Some(t) => &t[a][b],
                    None => {
                        let mut w = self.word(a);
                        w.extend(self.word(b));
                        fresh = st.normal_form(&w);
                        &fresh
                    }
                };
                for (&m, &k) in prod {
                    out.set(m, f.add(out.get(m), f.mul(c, k)));
                }
            }
        }
        out
    }

    pub fn multiply(&self, u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
        let (du, dv) = (self.to_dense(u)?, self.to_dense(v)?);
        Ok(self.to_sparse(&self.mul(&du, &dv)))
    }

    /// `v^k` for `k >= 0`.
    pub fn power(&self, v: &FpVector, k: u64) -> FpVector {
        (0..k).fold(self.one_dense(), |acc, _| self.mul(&acc, v))
    }

    pub(crate) fn actions(&self) -> &Actions {
        self.actions.get_or_init(|| {
            let n = self.size;
            let mut right = vec![Vec::with_capacity(n); n];
            let mut left = vec![Vec::with_capacity(n); n];
            for a in 0..n {
                for m in 0..n {
                    right[m].push(self.basis_product(a, m));
                    left[m].push(self.basis_product(m, a));
                }
            }
            Actions { right, left }
        })
    }

    /// `x * b_m` using the cached right action.
    pub fn mul_by_monomial_right(&self, x: &FpVector, m: usize) -> FpVector {
        let rows = &self.actions().right[m];
        let mut out = self.zero_dense();
        for (a, c) in x.nonzero() {
            out.add_scaled(&rows[a], c);
        }
        out
    }

    /// `b_m * x` using the cached left action.
    pub fn mul_by_monomial_left(&self, x: &FpVector, m: usize) -> FpVector {
        let rows = &self.actions().left[m];
        let mut out = self.zero_dense();
        for (a, c) in x.nonzero() {
            out.add_scaled(&rows[a], c);
        }
        out
    }

    /// Matrix of `t -> u t`.
    pub fn left_mul_matrix(&self, u: &FpVector) -> Matrix {
        let cols: Vec<FpVector> = (0..self.size)
            .map(|b| self.mul(u, &FpVector::unit(self.field(), self.size, b)))
            .collect();
        Matrix::from_columns(self.field(), self.size, &cols).expect("square")
    }

    /// Matrix of `t -> t u`.
    pub fn right_mul_matrix(&self, u: &FpVector) -> Matrix {
        let cols: Vec<FpVector> = (0..self.size)
            .map(|b| self.mul(&FpVector::unit(self.field(), self.size, b), u))
            .collect();
        Matrix::from_columns(self.field(), self.size, &cols).expect("square")
    }

    /// The counit: the coefficient of the identity monomial.
    pub fn epsilon(&self, u: &EnvElement) -> Result<u8> {
        self.check_parent(u)?;
        Ok(u.coefficient(0))
    }

    /// `ω = ker ε`, spanned by all non-identity monomials.
    pub fn omega(&self) -> Subspace {
        let f = self.field();
        Subspace::span(
            f,
            self.size,
            (1..self.size)
                .map(|i| FpVector::unit(f, self.size, i))
                .collect(),
        )
    }

    /// `ω^n`, built as `ω^(k+1) = ω^k · ω`.
    pub fn omega_power(&self, n: usize) -> Subspace {
        assert!(n >= 1, "powers of the augmentation ideal start at 1");
        let mut cur = self.omega();
        for _ in 1..n {
            if cur.is_zero() {
                break;
            }
            cur = self.product_with_omega(&cur);
        }
        cur
    }

    fn product_with_omega(&self, s: &Subspace) -> Subspace {
        let rows: Vec<FpVector> = s
            .basis()
            .iter()
            .flat_map(|v| (1..self.size).map(move |m| (v, m)))
            .map(|(v, m)| self.mul(v, &FpVector::unit(self.field(), self.size, m)))
            .collect();
        Subspace::span(self.field(), self.size, rows)
    }

    /// `ω^1, ω^2, ...` up to and including the first repeated (stable) term.
    pub fn omega_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.omega()];
        loop {
            let next = self.product_with_omega(out.last().unwrap());
            let done = &next == out.last().unwrap();
            out.push(next);
            if done {
                break;
            }
        }
        out
    }

    /// Degree-one part: the span of the generators.
    pub fn lie_span(&self) -> Subspace {
        Subspace::span(
            self.field(),
            self.size,
            (0..self.lie.dim())
                .map(|i| self.embed_lie(&self.lie.basis_vector(i)))
                .collect(),
        )
    }

    /// `L ∩ S`, pulled back to coordinates in `L`.
    pub fn intersect_with_lie(&self, s: &Subspace) -> Result<Subspace> {
        let meet = s.intersect(&self.lie_span())?;
        let rows: Vec<FpVector> = meet
            .basis()
            .iter()
            .map(|v| {
                let e: Vec<u8> = (0..self.lie.dim())
                    .map(|i| v.get(self.generator_index(i)))
                    .collect();
                FpVector::from_entries(self.field(), &e)
            })
            .collect();
        Subspace::rref(self.field(), self.lie.dim(), rows)
    }

    /// Is `u(L)` commutative? Equivalent to `L` abelian; checked on the product table.
    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| {
            (a + 1..self.size).all(|b| self.basis_product(a, b) == self.basis_product(b, a))
        })
    }

    /// Images in `u(L)` of the PBW basis of `u(H)` for a restricted subalgebra `H`, listed
    /// in the monomial order of `u(H)` built on the canonical basis of `H`.
    pub fn embed_subalgebra(&self, h: &Subspace) -> Result<(RestrictedLieAlgebra, Vec<FpVector>)> {
        let sub = self.lie.subalgebra(h)?;
        let gens: Vec<FpVector> = h.basis().iter().map(|b| self.embed_lie(b)).collect();
        let p = self.lie.p() as u64;
        let count = p.pow(h.dim() as u32);
        let images = (0..count)
            .map(|idx| {
                let exps = FpVector::from_index(self.field(), h.dim(), idx).entries();
                exps.iter()
                    .zip(&gens)
                    .fold(self.one_dense(), |acc, (&a, g)| {
                        self.mul(&acc, &self.power(g, a as u64))
                    })
            })
            .collect();
        Ok((sub, images))
    }

    /// Table of basis products, for reports and tests.
    pub fn product_table(&self) -> BTreeMap<(usize, usize), Vec<(usize, u8)>> {
        let mut out = BTreeMap::new();
        for a in 0..self.size {
            for b in 0..self.size {
                out.insert((a, b), self.basis_product(a, b).nonzero().collect());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn lie(p: u32, brackets: Vec<(usize, usize, &[u8])>, pmap: &[&[u8]]) -> RestrictedLieAlgebra {
        let names = ["x", "y", "z", "w"][..pmap.len()]
            .iter()
            .map(|s| s.to_string())
            .collect();
        RestrictedLieAlgebra::validated(
            f(p),
            names,
            brackets
                .into_iter()
                .map(|(i, j, v)| (i, j, FpVector::from_entries(f(p), v))),
            pmap.iter()
                .map(|r| FpVector::from_entries(f(p), r))
                .collect(),
        )
        .unwrap()
    }

    fn dense(a: &EnvAlgebra, coeffs: &[(usize, u8)]) -> FpVector {
        let mut v = FpVector::zero(a.field(), a.dim());
        for &(i, c) in coeffs {
            v.set(i, c);
        }
        v
    }

    #[test]
    fn build_counts_monomials() {
        let z = EnvAlgebra::build(&RestrictedLieAlgebra::zero(f(2)), 100).unwrap();
        assert_eq!(z.dim(), 1);
        let a = EnvAlgebra::build(&lie(2, vec![], &[&[0, 0], &[0, 0]]), 100).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(
            (0..4).map(|i| a.monomial_name(i)).collect::<Vec<_>>(),
            vec!["1", "y", "x", "x y"]
        );
        let b = EnvAlgebra::build(&lie(3, vec![], &[&[0, 0], &[0, 0]]), 100).unwrap();
        assert_eq!(b.dim(), 9);
        assert!(matches!(
            EnvAlgebra::build(&lie(3, vec![], &[&[0, 0], &[0, 0]]), 8),
            Err(Error::CapExceeded { needed: 9, .. })
        ));
    }

    #[test]
    fn straighten_examples() {
        // [x, y] = y, x^[2] = x, y^[2] = 0.
        let a =
            EnvAlgebra::build(&lie(2, vec![(0, 1, &[0, 1])], &[&[1, 0], &[0, 0]]), 100).unwrap();
        let (x, y, xy) = (a.generator_index(0), a.generator_index(1), 3);
        // y x = x y - [x, y] = x y + y over F_2
        let yx = a.straighten(&[1, 0]).unwrap();
        assert_eq!(yx.coeffs(), &[(y, 1), (xy, 1)]);
        assert_eq!(a.straighten(&[0, 0]).unwrap().coeffs(), &[(x, 1)]);
        assert_eq!(a.straighten(&[]).unwrap(), a.one());
    }

    #[test]
    fn multiply_examples() {
        let n = EnvAlgebra::build(&lie(2, vec![], &[&[0]]), 100).unwrap();
        let x = n.generator(0);
        assert!(n.multiply(&x, &x).unwrap().is_zero());
        assert_eq!(n.multiply(&n.one(), &x).unwrap(), x);
        // In F_2[x]/(x^2 + x): (1 + x) x = x + x^2 = 0.
        let t = EnvAlgebra::build(&lie(2, vec![], &[&[1]]), 100).unwrap();
        let one_plus_x = t.element(&dense(&t, &[(0, 1), (1, 1)])).unwrap();
        assert!(t.multiply(&one_plus_x, &t.generator(0)).unwrap().is_zero());
        let other = EnvAlgebra::build(&lie(2, vec![], &[&[0, 0], &[0, 0]]), 100).unwrap();
        assert!(matches!(
            other.multiply(&other.one(), &x),
            Err(Error::ParentMismatch)
        ));
    }

    #[test]
    fn omega_examples() {
        let n = EnvAlgebra::build(&lie(2, vec![], &[&[0]]), 100).unwrap();
        assert_eq!(n.epsilon(&n.one()).unwrap(), 1);
        assert_eq!(n.epsilon(&n.generator(0)).unwrap(), 0);
        assert_eq!(n.omega().dim(), 1);
        assert!(n.omega_power(2).is_zero());
        // x^[2] = y, y^[2] = 0: u(L) = F_2[x]/(x^4) with y = x^2.
        let j = EnvAlgebra::build(&lie(2, vec![], &[&[0, 1], &[0, 0]]), 100).unwrap();
        let x = j.embed_lie(&FpVector::from_entries(f(2), &[1, 0]));
        for k in 1..=4 {
            let expect = Subspace::span(f(2), 4, (k..4).map(|e| j.power(&x, e as u64)).collect());
            assert_eq!(j.omega_power(k), expect, "omega^{k}");
        }
        assert!(j.omega_power(4).is_zero());
        let y = Subspace::rref(f(2), 2, vec![FpVector::from_entries(f(2), &[0, 1])]).unwrap();
        assert_eq!(j.intersect_with_lie(&j.omega()).unwrap(), j.lie().full());
        assert_eq!(j.intersect_with_lie(&j.omega_power(2)).unwrap(), y);
        assert!(j.intersect_with_lie(&j.omega_power(3)).unwrap().is_zero());
    }

    #[test]
    fn pth_power_in_env_matches_lie_pmap_for_p3() {
        // [x, y] = y, x^[3] = x, y^[3] = 0 over F_3: compare x^3 computed by straightening
        // with the Jacobson-formula p-map for every element.
        let l = lie(3, vec![(0, 1, &[0, 1])], &[&[1, 0], &[0, 0]]);
        let a = EnvAlgebra::build(&l, 100).unwrap();
        for idx in 0..9 {
            let x = FpVector::from_index(f(3), 2, idx);
            let e = a.embed_lie(&x);
            assert_eq!(a.power(&e, 3), a.embed_lie(&l.pth_power(&x)), "x = {x:?}");
        }
    }
}
