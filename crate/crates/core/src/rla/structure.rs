use crate::error::{Error, Result};
use crate::gfp::{FpVector, Matrix, Subspace};

use super::RestrictedLieAlgebra;

/// A restricted subalgebra produced by [`RestrictedLieAlgebra::restricted_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub carrier: Subspace,
    pub is_ideal: bool,
    pub is_restricted: bool,
}

impl RestrictedLieAlgebra {
    /// Span of `[a, b]` over basis vectors `a` of `s` and `b` of `t`.
    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let rows = s
            .basis()
            .iter()
            .flat_map(|a| t.basis().iter().map(move |b| self.bracket(a, b)))
            .collect();
        Subspace::span(self.field, self.dim(), rows)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_spaces(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_spaces(&self.full(), s))
    }

    /// `[s, s] = 0`.
    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        self.bracket_spaces(s, s).is_zero()
    }

    /// The smallest restricted subalgebra containing `gens`.
    ///
    /// Alternates closing under brackets of basis pairs and adding p-th powers of basis
    /// vectors. Once both steps are stable the span is a subalgebra whose basis p-th powers
    /// stay inside, and Jacobson's formula then keeps every p-th power inside. Each round
    /// that changes anything raises the dimension, so at most `dim` rounds run.
    pub fn restricted_closure(&self, gens: &[FpVector]) -> SubalgebraReport {
        let mut s = Subspace::span(self.field, self.dim(), gens.to_vec());
        loop {
            let before = s.dim();
            loop {
                let next = s.extend(self.bracket_spaces(&s, &s).basis());
                if next.dim() == s.dim() {
                    break;
                }
                s = next;
            }
            let powers: Vec<FpVector> = s.basis().iter().map(|b| self.pth_power(b)).collect();
            s = s.extend(&powers);
            if s.dim() == before {
                break;
            }
        }
        SubalgebraReport {
            is_ideal: self.is_ideal(&s),
            is_restricted: true,
            carrier: s,
        }
    }

    /// `γ_i(L)`: `γ_1 = L`, `γ_{i+1} = [γ_i, L]`.
    pub fn gamma(&self, i: usize) -> Subspace {
        assert!(i >= 1, "the lower central series starts at 1");
        let full = self.full();
        let mut g = full.clone();
        for _ in 1..i {
            let next = self.bracket_spaces(&g, &full);
            if next == g {
                break;
            }
            g = next;
        }
        g
    }

    /// `S^[p]^n`: the restricted subalgebra generated by the `n`-fold p-th powers of the
    /// elements of `s`.
    ///
    /// When `s` is abelian the p-map is additive on the span of `s` and its iterated
    /// powers, so images of a basis suffice. Otherwise every element of `s` is visited,
    /// subject to `max_elements`.
    pub fn pth_subalgebra(&self, s: &Subspace, n: usize, max_elements: u64) -> Result<Subspace> {
        if n == 0 {
            return Ok(self.restricted_closure(s.basis()).carrier);
        }
        let images: Vec<FpVector> = if self.is_abelian_subspace(s) {
            s.basis()
                .iter()
                .map(|b| self.iterated_pth_power(b, n))
                .collect()
        } else {
            let count =
                s.cardinality()
                    .filter(|&c| c <= max_elements)
                    .ok_or(Error::BudgetExceeded {
                        what: "p-th power subalgebra of a non-abelian subspace",
                        needed: s.cardinality().unwrap_or(u64::MAX),
                        cap: max_elements,
                    })?;
            (0..count)
                .map(|i| self.iterated_pth_power(&s.element(i), n))
                .collect()
        };
        Ok(self.restricted_closure(&images).carrier)
    }

    /// `D_n(L) = sum over i p^j >= n of γ_i(L)^[p]^j`.
    ///
    /// The powers of a fixed `γ_i` shrink as `j` grows, so only the least admissible `j`
    /// matters for each `i`. The index `i` runs up to `max(n, dim + 1)`: the lower central
    /// series is stable from `dim + 1` on, and `i >= n` contributes the stable term itself.
    pub fn dn(&self, n: usize, max_elements: u64) -> Result<Subspace> {
        assert!(n >= 1, "D_n is defined for n >= 1");
        let p = self.p() as usize;
        let mut total = self.zero_subspace();
        let mut gamma = self.full();
        let top = n.max(self.dim() + 1);
        for i in 1..=top {
            if i > 1 {
                gamma = self.bracket_spaces(&gamma, &self.full());
            }
            let mut j = 0;
            let mut ipj = i;
            while ipj < n {
                ipj *= p;
                j += 1;
            }
            let term = self.pth_subalgebra(&gamma, j, max_elements)?;
            total = total.sum(&term)?;
            if total.is_full() {
                break;
            }
        }
        Ok(total)
    }

    /// `Z(L)`, the common kernel of all `ad e_i`.
    pub fn center(&self) -> Subspace {
        let d = self.dim();
        let blocks: Vec<Matrix> = (0..d).map(|i| self.ad(&self.basis_vector(i))).collect();
        Matrix::vstack(self.field, d, &blocks)
            .expect("square blocks")
            .kernel()
    }

    /// `C_L(x) = ker ad x`.
    pub fn centralizer(&self, x: &FpVector) -> Subspace {
        self.ad(x).kernel()
    }

    /// `L' = γ_2(L)`.
    pub fn derived(&self) -> Subspace {
        self.gamma(2)
    }

    /// The Frattini subalgebra, computed as `D_2(L) = L' + L^[p]`.
    pub fn frattini(&self, max_elements: u64) -> Result<Subspace> {
        self.dn(2, max_elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::PrimeField;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn v(e: &[u8]) -> FpVector {
        FpVector::from_entries(f2(), e)
    }

    fn alg(brackets: Vec<(usize, usize, FpVector)>, pmap: Vec<FpVector>) -> RestrictedLieAlgebra {
        let names = (0..pmap.len()).map(|i| format!("e{i}")).collect();
        RestrictedLieAlgebra::validated(f2(), names, brackets, pmap).unwrap()
    }

    fn line(e: &[u8]) -> Subspace {
        Subspace::rref(f2(), e.len(), vec![v(e)]).unwrap()
    }

    /// Abelian, x^[2] = y, y^[2] = 0.
    fn jordan2() -> RestrictedLieAlgebra {
        alg(vec![], vec![v(&[0, 1]), v(&[0, 0])])
    }

    fn nonabelian2() -> RestrictedLieAlgebra {
        alg(vec![(0, 1, v(&[0, 1]))], vec![v(&[1, 0]), v(&[0, 0])])
    }

    #[test]
    fn closure_examples() {
        let l = jordan2();
        assert!(l.restricted_closure(&[v(&[0, 0])]).carrier.is_zero());
        assert_eq!(l.restricted_closure(&[v(&[1, 0])]).carrier, l.full());
        let t = alg(vec![], vec![v(&[1])]);
        assert_eq!(t.restricted_closure(&[v(&[1])]).carrier, t.full());
        let r = nonabelian2().restricted_closure(&[v(&[0, 1])]);
        assert_eq!(r.carrier, line(&[0, 1]));
        assert!(r.is_ideal);
    }

    #[test]
    fn gamma_examples() {
        assert!(jordan2().gamma(2).is_zero());
        let l = nonabelian2();
        assert_eq!(l.gamma(1), l.full());
        assert_eq!(l.gamma(2), line(&[0, 1]));
        assert_eq!(l.gamma(3), line(&[0, 1]));
    }

    #[test]
    fn pth_subalgebra_examples() {
        let l = jordan2();
        assert_eq!(
            l.pth_subalgebra(&l.full(), 1, 1 << 16).unwrap(),
            line(&[0, 1])
        );
        assert!(l.pth_subalgebra(&l.full(), 2, 1 << 16).unwrap().is_zero());
        let t = alg(vec![], vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(t.pth_subalgebra(&t.full(), 3, 1 << 16).unwrap(), t.full());
        let n = nonabelian2();
        assert!(matches!(
            n.pth_subalgebra(&n.full(), 1, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dn_examples() {
        let l = jordan2();
        assert_eq!(l.dn(1, 1 << 16).unwrap(), l.full());
        assert_eq!(l.dn(2, 1 << 16).unwrap(), line(&[0, 1]));
        assert!(l.dn(3, 1 << 16).unwrap().is_zero());
        let t = alg(vec![], vec![v(&[0, 1]), v(&[1, 0])]);
        for n in 1..8 {
            assert_eq!(t.dn(n, 1 << 16).unwrap(), t.full());
        }
        // The stable term of the lower central series belongs to every D_n.
        let h = nonabelian2();
        for n in 1..10 {
            assert!(h.dn(n, 1 << 16).unwrap().contains(&v(&[0, 1])));
        }
    }

    #[test]
    fn center_and_frattini() {
        let l = jordan2();
        assert_eq!(l.center(), l.full());
        assert_eq!(
            l.frattini(1 << 16).unwrap(),
            l.pth_subalgebra(&l.full(), 1, 1 << 16).unwrap()
        );
        let n = nonabelian2();
        assert!(n.center().is_zero());
        assert_eq!(n.centralizer(&v(&[0, 1])), line(&[0, 1]));
        assert_eq!(n.derived(), line(&[0, 1]));
        let sa = alg(vec![], vec![v(&[0, 0]), v(&[0, 0])]);
        assert!(sa.frattini(1 << 16).unwrap().is_zero());
    }
}
