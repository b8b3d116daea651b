//! Total-degree-compatible term orders.
//!
//! Comparison is by total degree first; ties fall to a lexicographic pass
//! over the exponents read through a variable permutation (the variable at
//! `perm[0]` is most significant). The identity permutation gives plain
//! deglex.

use crate::error::{Error, Result};
use crate::group::Monomial;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    perm: Vec<usize>,
}

impl TermOrder {
    /// Deglex with the identity permutation on `n` variables.
    pub fn deglex(n: usize) -> Self {
        TermOrder {
            perm: (0..n).collect(),
        }
    }

    /// Deglex with ties broken through the given permutation (0-based
    /// variable indices, most significant first).
    pub fn with_permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::BadPermutation(format!("{perm:?}")));
            }
            seen[v] = true;
        }
        Ok(TermOrder { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for &v in &self.perm {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Key whose derived lexicographic `Ord` agrees with `cmp`.
    pub fn sort_key(&self, m: &Monomial) -> Vec<u64> {
        let mut key = Vec::with_capacity(self.perm.len() + 1);
        key.push(m.degree());
        key.extend(self.perm.iter().map(|&v| m.0[v]));
        key
    }

    pub fn monomial_from_key(&self, key: &[u64]) -> Monomial {
        let mut e = vec![0u64; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            e[v] = key[k + 1];
        }
        Monomial(e)
    }

    /// The least monomial of a nonempty iterator.
    pub fn min<'a, I>(&self, iter: I) -> Option<&'a Monomial>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        iter.into_iter().min_by(|a, b| self.cmp(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degree_dominates() {
        let ord = TermOrder::deglex(2);
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn lex_tiebreak() {
        let ord = TermOrder::deglex(4);
        // Equal degree 4: first differing variable decides.
        assert_eq!(
            ord.cmp(&m(&[1, 1, 2, 0]), &m(&[0, 0, 1, 3])),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&m(&[0, 0, 1, 3]), &m(&[0, 2, 0, 2])),
            Ordering::Less
        );
    }

    #[test]
    fn permutation_changes_ties() {
        let ord = TermOrder::with_permutation(vec![3, 2, 1, 0]).unwrap();
        // Reading from x4 down: (1,1,2,0) has the smallest x4 exponent.
        assert_eq!(
            ord.cmp(&m(&[1, 1, 2, 0]), &m(&[0, 0, 1, 3])),
            Ordering::Less
        );
    }

    #[test]
    fn key_round_trip() {
        let ord = TermOrder::with_permutation(vec![2, 0, 1]).unwrap();
        let mono = m(&[4, 0, 7]);
        assert_eq!(ord.monomial_from_key(&ord.sort_key(&mono)), mono);
        assert_eq!(ord.sort_key(&mono), vec![11, 7, 4, 0]);
    }

    #[test]
    fn bad_permutations_rejected() {
        assert!(TermOrder::with_permutation(vec![0, 0]).is_err());
        assert!(TermOrder::with_permutation(vec![1, 2]).is_err());
    }
}
