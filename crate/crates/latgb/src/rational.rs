//! Exact rational arithmetic helpers.
//!
//! Everything upstream of the decoder is float-free; these helpers keep the
//! conventions in one place (fractional part in `[0, 1)`, fraction-field gcd).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Fractional part of `x` in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// gcd over the fraction field: gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d),
/// normalized positive, with gcd(x, 0) = |x|.
pub fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
    Rational::new(num, a.denom() * b.denom())
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}
