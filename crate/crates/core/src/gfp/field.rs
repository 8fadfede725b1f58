use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest characteristic accepted unless a caller asks for a different bound.
pub const DEFAULT_MAX_PRIME: u32 = 7;

/// The prime field F_p for a small prime p.
///
/// Residues are stored as `u8` everywhere, so `p` never exceeds 251 even with a raised
/// bound; the default bound is 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeField {
    p: u8,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_max(p, DEFAULT_MAX_PRIME)
    }

    pub fn with_max(p: u32, max: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        if p > max || p > 251 {
            return Err(Error::CapExceeded {
                what: "characteristic",
                needed: p as u64,
                cap: max.min(251) as u64,
            });
        }
        Ok(PrimeField { p: p as u8 })
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (s % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// All residues `0..p` in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }
}

impl std::fmt::Display for PrimeField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large_primes() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(matches!(
            PrimeField::new(11),
            Err(Error::CapExceeded { .. })
        ));
        assert!(PrimeField::with_max(11, 13).is_ok());
    }

    #[test]
    fn fermat_and_inverses() {
        for p in [2u32, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, p as u64), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn reduce_handles_negatives() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.reduce(-1), 2);
        assert_eq!(f.reduce(7), 1);
    }
}
