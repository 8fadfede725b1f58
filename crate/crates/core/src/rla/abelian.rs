//! Tests that only make sense (or are only cheap) for abelian algebras, where the p-map is
//! an F_p-linear endomorphism `P`.

use crate::error::{Error, Result};
use crate::gfp::poly::{minimal_polynomial, poly_kernel};
use crate::gfp::{FpVector, Matrix, Subspace};

use super::RestrictedLieAlgebra;

/// Result of a cyclicity test; `generator` is present exactly when `cyclic` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTest {
    pub cyclic: bool,
    pub generator: Option<FpVector>,
}

impl CyclicTest {
    fn no() -> Self {
        CyclicTest {
            cyclic: false,
            generator: None,
        }
    }

    fn yes(g: FpVector) -> Self {
        CyclicTest {
            cyclic: true,
            generator: Some(g),
        }
    }
}

impl RestrictedLieAlgebra {
    /// Fitting decomposition `L = T ⊕ N` of the p-map: `T` is the stable image of `P^k`
    /// and `N` the stable kernel, both reached by `k = dim`.
    pub fn fitting(&self) -> Result<(Subspace, Subspace)> {
        if !self.is_abelian() {
            return Err(Error::NonAbelian {
                what: "Fitting decomposition of the p-map",
            });
        }
        let stable = self.pmap_matrix().pow(self.dim() as u64);
        Ok((stable.image(), stable.kernel()))
    }

    /// True iff `s` is abelian and the p-map restricted to `s` is a bijection of `s`.
    ///
    /// For a finite-dimensional abelian restricted subalgebra, `s^[p] = s` already forces a
    /// torus, so this is the whole test.
    pub fn is_torus_subspace(&self, s: &Subspace) -> bool {
        if !self.is_abelian_subspace(s) {
            return false;
        }
        let images: Vec<FpVector> = s.basis().iter().map(|b| self.pth_power(b)).collect();
        if !images.iter().all(|w| s.contains(w)) {
            return false;
        }
        Subspace::span(self.field, self.dim(), images).dim() == s.dim()
    }

    pub fn is_torus(&self) -> bool {
        self.is_torus_subspace(&self.full())
    }

    /// True iff `L^[p]^dim = 0`, i.e. every element is p-nilpotent.
    pub fn is_p_nilpotent(&self, max_elements: u64) -> Result<bool> {
        if self.is_abelian() {
            return Ok(self.pmap_matrix().pow(self.dim() as u64).is_zero());
        }
        Ok(self
            .pth_subalgebra(&self.full(), self.dim(), max_elements)?
            .is_zero())
    }

    fn is_element_p_nilpotent(&self, x: &FpVector) -> bool {
        self.iterated_pth_power(x, self.dim()).is_zero()
    }

    /// Is `L = <x>_p` for some `x`?
    ///
    /// Abelian algebras: `<x>_p` is the Krylov space of `x` under `P`, so `L` is cyclic iff
    /// the minimal polynomial of `P` has degree `dim`. A generator is assembled from the
    /// primary decomposition: on each primary component `ker q^k(P)` any vector outside
    /// `ker q^(k-1)(P)` is cyclic, and the sum of those is cyclic for `P`.
    ///
    /// Non-abelian algebras are searched exhaustively, subject to `max_elements`.
    pub fn is_cyclic(&self, max_elements: u64) -> Result<CyclicTest> {
        if self.dim() == 0 {
            return Ok(CyclicTest::yes(self.zero_vector()));
        }
        if !self.is_abelian() {
            return self.search_generator(max_elements, false);
        }
        let pm = self.pmap_matrix();
        let minpoly = minimal_polynomial(&pm);
        if minpoly.degree() != Some(self.dim()) {
            return Ok(CyclicTest::no());
        }
        let mut g = self.zero_vector();
        for (q, k) in minpoly.factor() {
            let component = poly_kernel(&q.pow(k), &pm);
            let lower = poly_kernel(&q.pow(k - 1), &pm);
            let v = component
                .basis()
                .iter()
                .find(|b| !lower.contains(b))
                .expect("primary component strictly larger than its predecessor");
            g.add_assign(v);
        }
        debug_assert_eq!(self.restricted_closure(&[g.clone()]).carrier, self.full());
        Ok(CyclicTest::yes(g))
    }

    /// Cyclic with a p-nilpotent generator.
    pub fn is_nilcyclic(&self, max_elements: u64) -> Result<CyclicTest> {
        if self.dim() == 0 {
            return Ok(CyclicTest::yes(self.zero_vector()));
        }
        if !self.is_abelian() {
            return self.search_generator(max_elements, true);
        }
        if !self.is_p_nilpotent(max_elements)? {
            return Ok(CyclicTest::no());
        }
        self.is_cyclic(max_elements)
    }

    /// Exhaustive search for `x` with `<x>_p = L`, in lexicographic order.
    pub(crate) fn search_generator(&self, max_elements: u64, nil: bool) -> Result<CyclicTest> {
        let full = self.full();
        let count =
            full.cardinality()
                .filter(|&c| c <= max_elements)
                .ok_or(Error::BudgetExceeded {
                    what: "generator search",
                    needed: full.cardinality().unwrap_or(u64::MAX),
                    cap: max_elements,
                })?;
        for i in 0..count {
            let x = full.element(i);
            if nil && !self.is_element_p_nilpotent(&x) {
                continue;
            }
            if self.restricted_closure(std::slice::from_ref(&x)).carrier.is_full() {
                return Ok(CyclicTest::yes(x));
            }
        }
        Ok(CyclicTest::no())
    }

    /// Matrix of the p-map restricted to an abelian restricted subalgebra, in the
    /// canonical basis of `s`.
    pub fn pmap_on(&self, s: &Subspace) -> Result<Matrix> {
        if !self.is_abelian_subspace(s) {
            return Err(Error::NonAbelian {
                what: "linear p-map on a subspace",
            });
        }
        let cols: Vec<FpVector> = s
            .basis()
            .iter()
            .map(|b| {
                let w = self.pth_power(b);
                let c = s.coordinates(&w).ok_or_else(|| {
                    Error::NotRestrictedSubalgebra(format!("{b:?}^[p] = {w:?} leaves the subspace"))
                })?;
                Ok(FpVector::from_entries(self.field, &c))
            })
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.field, s.dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::PrimeField;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn abelian(p: u32, pmap: &[&[u8]]) -> RestrictedLieAlgebra {
        let names = (0..pmap.len()).map(|i| format!("e{i}")).collect();
        let pm = pmap
            .iter()
            .map(|r| FpVector::from_entries(f(p), r))
            .collect();
        RestrictedLieAlgebra::validated(f(p), names, vec![], pm).unwrap()
    }

    #[test]
    fn fitting_examples() {
        let t = abelian(2, &[&[1]]);
        let (tt, nn) = t.fitting().unwrap();
        assert_eq!(tt, t.full());
        assert!(nn.is_zero());
        let s = abelian(2, &[&[0, 0], &[0, 0]]);
        let (tt, nn) = s.fitting().unwrap();
        assert!(tt.is_zero());
        assert_eq!(nn, s.full());
        let m = abelian(2, &[&[1, 0], &[0, 0]]);
        let (tt, nn) = m.fitting().unwrap();
        assert_eq!(tt.basis(), &[FpVector::from_entries(f(2), &[1, 0])]);
        assert_eq!(nn.basis(), &[FpVector::from_entries(f(2), &[0, 1])]);
    }

    #[test]
    fn fitting_rejects_nonabelian() {
        let l = RestrictedLieAlgebra::validated(
            f(2),
            vec!["x".into(), "y".into()],
            vec![(0, 1, FpVector::from_entries(f(2), &[0, 1]))],
            vec![
                FpVector::from_entries(f(2), &[1, 0]),
                FpVector::from_entries(f(2), &[0, 0]),
            ],
        )
        .unwrap();
        assert!(matches!(l.fitting(), Err(Error::NonAbelian { .. })));
        // Non-abelian algebras are never cyclic; the search says so.
        assert!(!l.is_cyclic(1 << 16).unwrap().cyclic);
        assert!(matches!(l.is_cyclic(2), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn torus_examples() {
        assert!(RestrictedLieAlgebra::zero(f(2)).is_torus());
        assert!(abelian(2, &[&[1]]).is_torus());
        assert!(!abelian(2, &[&[0]]).is_torus());
        assert!(abelian(3, &[&[0, 1], &[1, 0]]).is_torus());
    }

    #[test]
    fn cyclic_examples() {
        let z = RestrictedLieAlgebra::zero(f(2));
        assert!(z.is_cyclic(1).unwrap().cyclic);
        assert!(z.is_nilcyclic(1).unwrap().cyclic);
        let j = abelian(2, &[&[0, 1], &[0, 0]]);
        let c = j.is_nilcyclic(1 << 16).unwrap();
        assert_eq!(c.generator, Some(FpVector::from_entries(f(2), &[1, 0])));
        let s = abelian(2, &[&[0, 0], &[0, 0]]);
        assert!(!s.is_cyclic(1 << 16).unwrap().cyclic);
        // Two copies of the same torus: min poly t + 1 has degree 1 < 2.
        assert!(
            !abelian(2, &[&[1, 0], &[0, 1]])
                .is_cyclic(1 << 16)
                .unwrap()
                .cyclic
        );
        // A torus whose p-map is a companion matrix of t^2 + t + 1 is cyclic.
        let c = abelian(2, &[&[0, 1], &[1, 1]]).is_cyclic(1 << 16).unwrap();
        assert!(c.cyclic);
        assert!(
            !abelian(2, &[&[0, 1], &[1, 1]])
                .is_nilcyclic(1 << 16)
                .unwrap()
                .cyclic
        );
    }
}
