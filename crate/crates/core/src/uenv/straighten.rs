use std::collections::{BTreeMap, HashMap};

use crate::rla::RestrictedLieAlgebra;

/// Sparse coefficients keyed by monomial index.
pub(crate) type Sparse = BTreeMap<usize, u8>;

/// Rewrites words in the generators into PBW normal form using
/// `x_a x_b = x_b x_a + [x_a, x_b]` for `a > b` and `x_a^p = x_a^[p]`.
///
/// Rewrites always act on the leftmost inversion first; a sorted word is then reduced at
/// its leftmost run of `p` equal letters. Every step lowers (length, inversion count)
/// lexicographically, so the recursion terminates. Results are memoized per word.
pub(crate) struct Straightener<'a> {
    lie: &'a RestrictedLieAlgebra,
    memo: HashMap<Vec<u8>, Sparse>,
}

impl<'a> Straightener<'a> {
    pub fn new(lie: &'a RestrictedLieAlgebra) -> Self {
        Straightener {
            lie,
            memo: HashMap::new(),
        }
    }

    fn monomial_index(&self, sorted: &[u8]) -> usize {
        let p = self.lie.p() as usize;
        let d = self.lie.dim();
        let mut exps = vec![0usize; d];
        for &g in sorted {
            exps[g as usize] += 1;
        }
        exps.iter().fold(0, |acc, &e| acc * p + e)
    }

    fn add_into(&self, acc: &mut Sparse, part: &Sparse, c: u8) {
        let f = self.lie.field();
        for (&k, &v) in part {
            let e = acc.entry(k).or_insert(0);
            *e = f.add(*e, f.mul(v, c));
            if *e == 0 {
                acc.remove(&k);
            }
        }
    }

    pub fn normal_form(&mut self, word: &[u8]) -> Sparse {
        if let Some(r) = self.memo.get(word) {
            return r.clone();
        }
        let p = self.lie.p() as usize;
        let mut out = Sparse::new();
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| word[k] > word[k + 1]) {
            let (a, b) = (word[k] as usize, word[k + 1] as usize);
            let mut swapped = word.to_vec();
            swapped.swap(k, k + 1);
            let part = self.normal_form(&swapped);
            self.add_into(&mut out, &part, 1);
            let br = self.lie.basis_bracket(a, b).clone();
            for (l, c) in br.nonzero() {
                let mut w = word[..k].to_vec();
                w.push(l as u8);
                w.extend_from_slice(&word[k + 2..]);
                let part = self.normal_form(&w);
                self.add_into(&mut out, &part, c);
            }
        } else if let Some(k) =
            (0..word.len()).find(|&k| k + p <= word.len() && word[k + p - 1] == word[k])
        {
            let a = word[k] as usize;
            let pw = self.lie.basis_pth_power(a).clone();
            for (l, c) in pw.nonzero() {
                let mut w = word[..k].to_vec();
                w.push(l as u8);
                w.extend_from_slice(&word[k + p..]);
                let part = self.normal_form(&w);
                self.add_into(&mut out, &part, c);
            }
        } else {
            out.insert(self.monomial_index(word), 1);
        }
        self.memo.insert(word.to_vec(), out.clone());
        out
    }
}
