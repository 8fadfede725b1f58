use std::fmt;

use super::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    /// F_2 only; bits past `len` in the last word are always zero.
    Bits(Vec<u64>),
    /// One residue per byte.
    Bytes(Vec<u8>),
}

/// A vector of fixed length over F_p.
///
/// Over F_2 the entries are packed 64 per word so that additions are word-wide XORs; for odd
/// p every entry takes a byte. Equality and hashing are exact on the entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    field: PrimeField,
    len: usize,
    repr: Repr,
}

#[inline]
fn words(len: usize) -> usize {
    len.div_ceil(64)
}

impl FpVector {
    pub fn zero(field: PrimeField, len: usize) -> Self {
        let repr = if field.p() == 2 {
            Repr::Bits(vec![0; words(len)])
        } else {
            Repr::Bytes(vec![0; len])
        };
        FpVector { field, len, repr }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(field: PrimeField, len: usize, i: usize) -> Self {
        let mut v = Self::zero(field, len);
        v.set(i, 1);
        v
    }

    /// Builds a vector from residues, reducing each entry mod p.
    pub fn from_entries(field: PrimeField, entries: &[u8]) -> Self {
        let mut v = Self::zero(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e % field.p());
        }
        v
    }

    pub fn from_i64(field: PrimeField, entries: &[i64]) -> Self {
        let mut v = Self::zero(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, field.reduce(e));
        }
        v
    }

    /// The element with index `index` in the base-p counting order where coordinate 0 is
    /// the most significant digit. Enumerating `0..p^len` therefore walks vectors in
    /// lexicographic order.
    pub fn from_index(field: PrimeField, len: usize, mut index: u64) -> Self {
        let mut v = Self::zero(field, len);
        let p = field.p() as u64;
        for i in (0..len).rev() {
            v.set(i, (index % p) as u8);
            index /= p;
        }
        v
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        match &self.repr {
            Repr::Bits(w) => ((w[i / 64] >> (i % 64)) & 1) as u8,
            Repr::Bytes(b) => b[i],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(i < self.len);
        let value = value % self.field.p();
        match &mut self.repr {
            Repr::Bits(w) => {
                let mask = 1u64 << (i % 64);
                if value == 1 {
                    w[i / 64] |= mask;
                } else {
                    w[i / 64] &= !mask;
                }
            }
            Repr::Bytes(b) => b[i] = value,
        }
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(w) => w.iter().all(|&x| x == 0),
            Repr::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    /// Position and value of the first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, u8)> {
        match &self.repr {
            Repr::Bits(w) => w
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(k, &x)| (k * 64 + x.trailing_zeros() as usize, 1)),
            Repr::Bytes(b) => b
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(i, &x)| (i, x)),
        }
    }

    /// Iterator over `(index, value)` for nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        (0..self.len).filter_map(move |i| {
            let v = self.get(i);
            (v != 0).then_some((i, v))
        })
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FpVector, c: u8) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return;
        }
        match (&mut self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= *y;
                }
            }
            (Repr::Bytes(a), Repr::Bytes(b)) => {
                let p = f.p() as u16;
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = ((*x as u16 + c as u16 * y as u16) % p) as u8;
                }
            }
            _ => panic!("field mismatch in add_scaled"),
        }
    }

    pub fn add_assign(&mut self, other: &FpVector) {
        self.add_scaled(other, 1);
    }

    pub fn sub_assign(&mut self, other: &FpVector) {
        let m = self.field.neg(1);
        self.add_scaled(other, m);
    }

    pub fn scale(&mut self, c: u8) {
        let f = self.field;
        match &mut self.repr {
            Repr::Bits(w) => {
                if c.is_multiple_of(2) {
                    w.iter_mut().for_each(|x| *x = 0);
                }
            }
            Repr::Bytes(b) => b.iter_mut().for_each(|x| *x = f.mul(*x, c)),
        }
    }

    pub fn scaled(&self, c: u8) -> FpVector {
        let mut v = self.clone();
        v.scale(c);
        v
    }

    pub fn dot(&self, other: &FpVector) -> u8 {
        assert_eq!(self.len, other.len, "vector length mismatch");
        match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                let ones: u32 = a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum();
                (ones % 2) as u8
            }
            (Repr::Bytes(a), Repr::Bytes(b)) => {
                let p = self.field.p() as u32;
                let s: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
                (s % p) as u8
            }
            _ => panic!("field mismatch in dot"),
        }
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &FpVector) -> FpVector {
        let mut v = FpVector::zero(self.field, self.len + other.len);
        for (i, x) in self.nonzero() {
            v.set(i, x);
        }
        for (i, x) in other.nonzero() {
            v.set(self.len + i, x);
        }
        v
    }

    /// Entries `range` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> FpVector {
        let mut v = FpVector::zero(self.field, end - start);
        for i in start..end {
            v.set(i - start, self.get(i));
        }
        v
    }
}

impl fmt::Debug for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn packed_and_byte_arithmetic_agree_on_f2_semantics() {
        let a = FpVector::from_entries(f(2), &[1, 0, 1, 1]);
        let b = FpVector::from_entries(f(2), &[1, 1, 0, 1]);
        let mut c = a.clone();
        c.add_assign(&b);
        assert_eq!(c.entries(), vec![0, 1, 1, 0]);
        assert_eq!(a.dot(&b), 0);
    }

    #[test]
    fn long_packed_vectors_cross_word_boundaries() {
        let mut v = FpVector::zero(f(2), 130);
        v.set(129, 1);
        v.set(64, 1);
        assert_eq!(v.first_nonzero(), Some((64, 1)));
        assert_eq!(v.nonzero().map(|x| x.0).collect::<Vec<_>>(), vec![64, 129]);
        v.set(64, 0);
        assert_eq!(v.first_nonzero(), Some((129, 1)));
    }

    #[test]
    fn index_order_is_lexicographic() {
        let v = FpVector::from_index(f(3), 3, 5);
        assert_eq!(v.entries(), vec![0, 1, 2]);
        let w = FpVector::from_index(f(3), 3, 9);
        assert_eq!(w.entries(), vec![1, 0, 0]);
    }

    #[test]
    fn odd_prime_scaled_add() {
        let mut a = FpVector::from_entries(f(5), &[1, 2, 3]);
        let b = FpVector::from_entries(f(5), &[4, 4, 4]);
        a.add_scaled(&b, 2);
        assert_eq!(a.entries(), vec![4, 0, 1]);
        assert_eq!(a.concat(&b).entries(), vec![4, 0, 1, 4, 4, 4]);
    }
}
