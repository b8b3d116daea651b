//! Elements of a product of cyclic groups and the monomials that carry them.
//!
//! A `GroupElement` is componentwise reduced below the orders `g`; a
//! `Monomial` is an exponent vector capped at `g` (the cap shows up when a
//! leader is multiplied by one more variable). `psi` maps a monomial onto its
//! group element by reducing each exponent mod `g_i`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Orders of the cyclic factors of `G = Z/g_1 x ... x Z/g_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    g: Vec<u64>,
}

/// Componentwise-reduced element of `G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u64>);

/// Exponent vector; total degree is the sum of entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u64>);

impl GroupSpec {
    pub fn new(g: Vec<u64>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::EmptyGroup);
        }
        if let Some(i) = g.iter().position(|&gi| gi == 0) {
            return Err(Error::ZeroOrder(i));
        }
        Ok(Self { g })
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.g
    }

    pub fn order_product(&self) -> u128 {
        self.g.iter().map(|&x| x as u128).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.g.len()])
    }

    /// Validates range and dimension.
    pub fn element(&self, a: Vec<u64>) -> Result<GroupElement> {
        if a.len() != self.g.len() {
            return Err(Error::DimensionMismatch {
                expected: self.g.len(),
                got: a.len(),
            });
        }
        for (i, (&v, &o)) in a.iter().zip(&self.g).enumerate() {
            if v >= o {
                return Err(Error::ComponentOutOfRange {
                    index: i,
                    value: v,
                    order: o,
                });
            }
        }
        Ok(GroupElement(a))
    }

    /// Reduces an arbitrary exponent vector componentwise mod `g`.
    pub fn reduce(&self, raw: &[u64]) -> GroupElement {
        GroupElement(raw.iter().zip(&self.g).map(|(&v, &o)| v % o).collect())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.g)
                .map(|((&x, &y), &o)| (x + y) % o)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.g)
                .map(|((&x, &y), &o)| (x + o - y) % o)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.g).map(|(&x, &o)| (o - x) % o).collect())
    }

    /// The monoid morphism from monomials into `G`.
    pub fn psi(&self, m: &Monomial) -> GroupElement {
        self.reduce(&m.0)
    }

    /// The monomial `x^a` of a group element.
    pub fn monomial(&self, a: &GroupElement) -> Monomial {
        Monomial(a.0.clone())
    }

    /// True when no exponent reaches its order (so `psi` is the identity).
    pub fn is_reduced(&self, m: &Monomial) -> bool {
        m.0.iter().zip(&self.g).all(|(&e, &o)| e < o)
    }

    /// All group elements in odometer order (first coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let n = self.g.len();
        let mut cur = vec![0u64; n];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = GroupElement(cur.clone());
            let mut i = 0;
            loop {
                if i == n {
                    done = true;
                    break;
                }
                cur[i] += 1;
                if cur[i] < self.g[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
            Some(out)
        })
    }
}

/// Sum of the components as integers: the decoding weight.
pub fn g_norm(a: &GroupElement) -> u64 {
    a.0.iter().sum()
}

/// l1 distance between the canonical representatives in `[0, g_i)`.
pub fn l1_distance(a: &GroupElement, b: &GroupElement) -> u64 {
    a.0.iter().zip(&b.0).map(|(&x, &y)| x.abs_diff(y)).sum()
}

impl GroupElement {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i)
    }
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Quotient by `x_i`; `None` when `x_i` is not in the support.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    /// `self / other * tail` for a divisor `other`.
    pub fn rewrite(&self, lead: &Monomial, tail: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&lead.0)
                .zip(&tail.0)
                .map(|((&e, &l), &t)| e - l + t)
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(g: &[u64]) -> GroupSpec {
        GroupSpec::new(g.to_vec()).unwrap()
    }

    #[test]
    fn g_norm_examples() {
        assert_eq!(g_norm(&GroupElement(vec![0, 0, 1, 2])), 3);
        assert_eq!(g_norm(&GroupElement(vec![0, 0, 0, 0])), 0);
        assert_eq!(g_norm(&GroupElement(vec![1, 1, 2, 0])), 4);
    }

    #[test]
    fn modular_arithmetic() {
        let s = spec(&[2, 6, 12, 4]);
        let z = s.element(vec![1, 3, 7, 0]).unwrap();
        assert_eq!(s.neg(&z), GroupElement(vec![1, 3, 5, 0]));
        let e = s.element(vec![0, 0, 1, 2]).unwrap();
        assert_eq!(s.sub(&z, &e), GroupElement(vec![1, 3, 6, 2]));
        let ep = s.element(vec![0, 2, 1, 0]).unwrap();
        assert_eq!(s.add(&z, &ep), GroupElement(vec![1, 5, 8, 0]));
    }

    #[test]
    fn psi_caps_exponents() {
        let s = spec(&[2, 6]);
        assert_eq!(s.psi(&Monomial(vec![2, 7])), GroupElement(vec![0, 1]));
        assert!(!s.is_reduced(&Monomial(vec![2, 0])));
        assert!(s.is_reduced(&Monomial(vec![1, 5])));
    }

    #[test]
    fn element_range_checked() {
        let s = spec(&[2, 6]);
        assert!(matches!(
            s.element(vec![2, 0]),
            Err(Error::ComponentOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            s.element(vec![1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_covers_group() {
        let s = spec(&[2, 3]);
        let all: Vec<_> = s.elements().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], GroupElement(vec![0, 0]));
        assert_eq!(all[5], GroupElement(vec![1, 2]));
    }

    #[test]
    fn monomial_display() {
        assert_eq!(Monomial(vec![1, 1, 2, 0]).to_string(), "x1*x2*x3^2");
        assert_eq!(Monomial(vec![0, 0, 1, 3]).to_string(), "x3*x4^3");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }

    #[test]
    fn l1_uses_representatives() {
        let z = GroupElement(vec![1, 3, 7, 0]);
        assert_eq!(l1_distance(&z, &GroupElement(vec![1, 3, 6, 2])), 3);
        assert_eq!(l1_distance(&z, &GroupElement(vec![1, 1, 7, 3])), 5);
    }
}
