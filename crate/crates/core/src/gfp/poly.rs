//! Univariate polynomials over F_p, just enough for minimal polynomials and primary
//! decompositions of small linear maps.

use super::field::PrimeField;
use super::matrix::Matrix;
use super::subspace::Subspace;
use super::vector::FpVector;

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u8>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.p();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::new(field, vec![1])
    }

    /// `t^k`.
    pub fn monomial(field: PrimeField, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Poly::new(field, c)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv(lead);
                Poly::new(
                    self.field,
                    self.coeffs
                        .iter()
                        .map(|&c| self.field.mul(c, inv))
                        .collect(),
                )
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let f = self.field;
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv(d.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u8; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = f.mul(*rem.last().unwrap(), inv);
            quo[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, dc));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::new(f, quo), Poly::new(f, rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        self.mul(other).divrem(&self.gcd(other)).0.monic()
    }

    /// `q(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.nrows();
        let mut acc = Matrix::zero(self.field, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).expect("square");
            acc = acc.add(&Matrix::identity(self.field, n).scaled(c));
        }
        acc
    }

    /// Monic irreducible factors with multiplicities, by trial division. Intended for the
    /// tiny degrees that occur for minimal polynomials of structure matrices.
    pub fn factor(&self) -> Vec<(Poly, usize)> {
        let f = self.field;
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut deg = 1;
        while rest.degree().unwrap_or(0) > 0 {
            if 2 * deg > rest.degree().unwrap() {
                out.push((rest.clone(), 1));
                break;
            }
            let count = (f.p() as u64).pow(deg as u32);
            for idx in 0..count {
                let mut c = FpVector::from_index(f, deg, idx).entries();
                c.reverse();
                c.push(1);
                let cand = Poly::new(f, c);
                let mut mult = 0;
                loop {
                    let (q, r) = rest.divrem(&cand);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
            }
            deg += 1;
        }
        out.sort_by(|a, b| {
            a.0.coeffs
                .len()
                .cmp(&b.0.coeffs.len())
                .then(a.0.coeffs.cmp(&b.0.coeffs))
        });
        out
    }
}

/// Minimal polynomial of `v` under `m`: the monic `q` of least degree with `q(m) v = 0`.
pub fn local_minimal_polynomial(m: &Matrix, v: &FpVector) -> Poly {
    let f = m.field();
    let n = v.len();
    // Krylov vectors, each tagged with the combination of powers it stands for.
    let mut krylov: Vec<FpVector> = Vec::new();
    let mut cur = v.clone();
    for k in 0..=n {
        // Try to express cur = m^k v in terms of the previous ones.
        let mut rows: Vec<FpVector> = krylov
            .iter()
            .enumerate()
            .map(|(i, w)| w.concat(&FpVector::unit(f, n + 1, i)))
            .collect();
        rows.push(cur.concat(&FpVector::unit(f, n + 1, k)));
        let mut reduced = rows.clone();
        let pivots = super::subspace::row_reduce(f, 2 * n + 1, &mut reduced);
        if let Some((row, _)) = reduced.iter().zip(&pivots).find(|(_, &c)| c >= n) {
            let rel = row.slice(n, 2 * n + 1);
            return Poly::new(f, rel.entries()).monic();
        }
        krylov.push(cur.clone());
        cur = m.apply(&cur);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Minimal polynomial of a square matrix, as the lcm of the local minimal polynomials of
/// the standard basis vectors.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let f = m.field();
    let n = m.nrows();
    (0..n).fold(Poly::one(f), |acc, i| {
        acc.lcm(&local_minimal_polynomial(m, &FpVector::unit(f, n, i)))
    })
}

/// `{ v : q(m) v = 0 }`.
pub fn poly_kernel(q: &Poly, m: &Matrix) -> Subspace {
    q.eval_matrix(m).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn divrem_and_gcd() {
        let fp = f(3);
        let a = Poly::new(fp, vec![2, 0, 1]); // t^2 - 1 = (t - 1)(t + 1)
        let b = Poly::new(fp, vec![2, 1]); // t - 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::new(fp, vec![1, 1]));
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn factor_over_f2() {
        let fp = f(2);
        // t^3 + t = t (t + 1)^2
        let q = Poly::new(fp, vec![0, 1, 0, 1]);
        let fac = q.factor();
        assert_eq!(
            fac,
            vec![
                (Poly::new(fp, vec![0, 1]), 1),
                (Poly::new(fp, vec![1, 1]), 2)
            ]
        );
        // t^2 + t + 1 is irreducible
        let irr = Poly::new(fp, vec![1, 1, 1]);
        assert_eq!(irr.factor(), vec![(irr.clone(), 1)]);
    }

    #[test]
    fn minimal_polynomial_of_zero_and_identity() {
        let fp = f(2);
        assert_eq!(
            minimal_polynomial(&Matrix::zero(fp, 2, 2)),
            Poly::monomial(fp, 1)
        );
        assert_eq!(
            minimal_polynomial(&Matrix::identity(fp, 3)),
            Poly::new(fp, vec![1, 1])
        );
    }

    #[test]
    fn minimal_polynomial_annihilates() {
        let fp = f(3);
        let m = Matrix::from_rows(
            fp,
            3,
            vec![
                FpVector::from_entries(fp, &[0, 1, 2]),
                FpVector::from_entries(fp, &[1, 1, 0]),
                FpVector::from_entries(fp, &[2, 0, 1]),
            ],
        )
        .unwrap();
        let q = minimal_polynomial(&m);
        assert!(q.eval_matrix(&m).is_zero());
    }
}
