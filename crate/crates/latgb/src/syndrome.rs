//! The syndrome map: fractional part of a group element's image under the
//! parity-check matrix. Syndromes are constant on cosets of the label code
//! and zero exactly on it.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, Monomial};
use crate::rational::{frac, Rational};
use num_traits::Zero;
use std::fmt;

/// Canonical coset identifier: one rational in `[0, 1)` per coordinate,
/// kept in lowest terms by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syndrome(pub Vec<Rational>);

impl Syndrome {
    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Componentwise sum reduced back into `[0, 1)`.
    pub fn add(&self, other: &Syndrome) -> Syndrome {
        Syndrome(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| frac(&(a + b)))
                .collect(),
        )
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// `frac(a * h)` for a reduced group element.
pub fn of_element(h: &[Vec<Rational>], a: &GroupElement) -> Result<Syndrome> {
    if a.0.len() != h.len() {
        return Err(Error::DimensionMismatch {
            expected: h.len(),
            got: a.0.len(),
        });
    }
    let cols = h.first().map_or(0, Vec::len);
    let mut acc = vec![Rational::zero(); cols];
    for (ai, row) in a.0.iter().zip(h) {
        if *ai == 0 {
            continue;
        }
        let scale = Rational::from_integer((*ai).into());
        for (dst, e) in acc.iter_mut().zip(row) {
            *dst += e * &scale;
        }
    }
    Ok(Syndrome(acc.iter().map(frac).collect()))
}

/// Syndrome of a monomial: exponents reduce through `psi` first.
pub fn of_monomial(h: &[Vec<Rational>], spec: &GroupSpec, m: &Monomial) -> Result<Syndrome> {
    of_element(h, &spec.psi(m))
}

/// Membership test: true iff every entry of `a * h` is an integer.
pub fn is_codeword(h: &[Vec<Rational>], a: &GroupElement) -> Result<bool> {
    Ok(of_element(h, a)?.is_zero())
}
