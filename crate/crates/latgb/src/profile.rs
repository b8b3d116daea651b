//! Exact derivation of a lattice's label-code data from a rational basis.
//!
//! The chain of axes is the Gram-Schmidt chain of the supplied basis. All
//! scale factors stay rational relative to the axis lengths: the projection
//! determinant on axis `i` is `p[i] * sqrt(normsq[i])` and the cross-section
//! determinant is `c[i] * sqrt(normsq[i])`. The square roots cancel inside
//! the parity check, so `H = diag(p) * mu^-1` is exact, and only the decoder
//! ever evaluates a float.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::hnf::integer_kernel;
use crate::rational::{is_integer, rat, rational_gcd, to_f64, Rational};
use crate::syndrome::{self, Syndrome};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rows of a lattice basis; rows must be linearly independent, which is
/// checked when the Gram-Schmidt data is computed.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    rows: Vec<Vec<Rational>>,
}

impl Basis {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let m = rows[0].len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::RaggedBasis);
        }
        Ok(Basis { rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Basis::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }
}

/// Gram-Schmidt coefficients and squared norms of the orthogonal vectors.
///
/// `mu` is unit lower triangular; row `j` holds the coordinates of basis row
/// `j` along the orthogonal axes, so `mu * diag(normsq) * mu^T` reproduces
/// the Gram matrix exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct GSData {
    mu: Vec<Vec<Rational>>,
    normsq: Vec<Rational>,
}

impl GSData {
    pub fn rank(&self) -> usize {
        self.normsq.len()
    }

    pub fn mu(&self) -> &[Vec<Rational>] {
        &self.mu
    }

    pub fn normsq(&self) -> &[Rational] {
        &self.normsq
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact Gram-Schmidt over the rationals.
pub fn gram_schmidt(basis: &Basis) -> Result<GSData> {
    let r = basis.rank();
    let mut bstar: Vec<Vec<Rational>> = Vec::with_capacity(r);
    let mut normsq: Vec<Rational> = Vec::with_capacity(r);
    let mut mu = vec![vec![Rational::zero(); r]; r];

    for (i, row) in basis.rows().iter().enumerate() {
        let mut v = row.clone();
        for j in 0..i {
            let coeff = dot(row, &bstar[j]) / &normsq[j];
            for (ve, be) in v.iter_mut().zip(&bstar[j]) {
                *ve -= &coeff * be;
            }
            mu[i][j] = coeff;
        }
        mu[i][i] = Rational::one();
        let nsq = dot(&v, &v);
        if nsq.is_zero() {
            return Err(Error::DependentRows(i));
        }
        normsq.push(nsq);
        bstar.push(v);
    }

    Ok(GSData { mu, normsq })
}

/// Projection scale factors: `p[i]` is the gcd of the `mu` entries in column
/// `i` at or below the diagonal, i.e. the generator of the projection of the
/// lattice onto axis `i` in axis units.
pub fn projection_determinants(gs: &GSData) -> Vec<Rational> {
    let r = gs.rank();
    (0..r)
        .map(|i| {
            let mut g = Rational::zero();
            for j in i..r {
                g = rational_gcd(&g, &gs.mu[j][i]);
            }
            g
        })
        .collect()
}

/// Cross-section scale factors: `c[i]` is the least positive axis-`i`
/// coordinate over integer combinations that vanish on every other axis,
/// found through an integer-kernel computation after clearing denominators.
pub fn cross_section_determinants(gs: &GSData) -> Result<Vec<Rational>> {
    let r = gs.rank();
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        // Columns j != i of mu, scaled integral column by column.
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(r - 1);
        for j in (0..r).filter(|&j| j != i) {
            let lcm = gs
                .mu
                .iter()
                .fold(BigInt::one(), |acc, row| acc.lcm(row[j].denom()));
            cols.push(
                gs.mu
                    .iter()
                    .map(|row| row[j].numer() * (&lcm / row[j].denom()))
                    .collect(),
            );
        }
        let a: Vec<Vec<BigInt>> = (0..r)
            .map(|row| cols.iter().map(|col| col[row].clone()).collect())
            .collect();
        let kernel = integer_kernel(&a);
        if kernel.len() != 1 {
            return Err(Error::EmptyCrossSection(i));
        }
        let x = &kernel[0];
        let value: Rational = x
            .iter()
            .zip(&gs.mu)
            .map(|(xi, row)| Rational::from_integer(xi.clone()) * &row[i])
            .sum();
        if value.is_zero() {
            return Err(Error::EmptyCrossSection(i));
        }
        out.push(value.abs());
    }
    Ok(out)
}

/// Cyclic group orders `g[i] = c[i] / p[i]`, each verified to be a positive
/// integer.
pub fn group_orders(p: &[Rational], c: &[Rational]) -> Result<Vec<u64>> {
    p.iter()
        .zip(c)
        .enumerate()
        .map(|(i, (pi, ci))| {
            let q = ci / pi;
            if !is_integer(&q) || !q.is_positive() {
                return Err(Error::NonIntegerOrder {
                    axis: i,
                    value: q.to_string(),
                });
            }
            q.to_integer().to_u64().ok_or(Error::OrderOverflow(i))
        })
        .collect()
}

fn unit_lower_inverse(mu: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let r = mu.len();
    // row_i(inv) = e_i - sum_{k<i} mu[i][k] * row_k(inv)
    let mut inv: Vec<Vec<Rational>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = vec![Rational::zero(); r];
        row[i] = Rational::one();
        for k in 0..i {
            let coeff = &mu[i][k];
            if !coeff.is_zero() {
                for (dst, src) in row.iter_mut().zip(&inv[k]) {
                    *dst -= coeff * src;
                }
            }
        }
        inv.push(row);
    }
    inv
}

/// Parity check `H = diag(p) * mu^-1`; the rows satisfy
/// `g[i] * row_i(H)` integral.
pub fn parity_check(gs: &GSData, p: &[Rational]) -> Vec<Vec<Rational>> {
    let inv = unit_lower_inverse(&gs.mu);
    inv.into_iter()
        .zip(p)
        .map(|(row, pi)| row.into_iter().map(|e| e * pi).collect())
        .collect()
}

/// Labels of the basis rows: row `j` maps to
/// `((mu[j][i] / p[i]) mod g[i])_i`, each entry verified integral.
pub fn label_morphism(gs: &GSData, p: &[Rational], g: &[u64]) -> Result<Vec<GroupElement>> {
    let r = gs.rank();
    let mut labels = Vec::with_capacity(r);
    for j in 0..r {
        let mut a = Vec::with_capacity(r);
        for i in 0..r {
            let t = &gs.mu[j][i] / &p[i];
            if !is_integer(&t) {
                return Err(Error::NonIntegerLabel { row: j, axis: i });
            }
            let gi = BigInt::from(g[i]);
            let res = t.to_integer().mod_floor(&gi);
            a.push(res.to_u64().expect("residue below a u64 order"));
        }
        labels.push(GroupElement(a));
    }
    Ok(labels)
}

/// Exact label-code data of a lattice: group orders, scale factors, parity
/// check, and the labels of the basis rows.
///
/// Only `g`, `H`, the labels, and the squared products `p^2 * normsq`,
/// `c^2 * normsq` are observable; the split of the squared products into
/// `(p, c, normsq)` is a gauge choice (the derived form uses Gram-Schmidt
/// norms, a reloaded direct form uses `normsq = P_sq`). Equality compares
/// observables only.
#[derive(Clone, Debug)]
pub struct LatticeProfile {
    g: Vec<u64>,
    p: Vec<Rational>,
    c: Vec<Rational>,
    normsq: Vec<Rational>,
    h: Vec<Vec<Rational>>,
    labels: Vec<GroupElement>,
}

impl LatticeProfile {
    /// Full derivation pipeline from a basis.
    pub fn derive(basis: &Basis) -> Result<Self> {
        let gs = gram_schmidt(basis)?;
        let p = projection_determinants(&gs);
        let c = cross_section_determinants(&gs)?;
        let g = group_orders(&p, &c)?;
        let h = parity_check(&gs, &p);
        let labels = label_morphism(&gs, &p, &g)?;
        for (j, label) in labels.iter().enumerate() {
            if !syndrome::is_codeword(&h, label)? {
                return Err(Error::Inconsistent(format!(
                    "label of basis row {j} fails the membership check"
                )));
            }
        }
        Ok(LatticeProfile {
            g,
            p,
            c,
            normsq: gs.normsq,
            h,
            labels,
        })
    }

    /// Profile from directly supplied data. Shapes and the relation
    /// `c_sq = g^2 * p_sq` are validated; deeper consistency (integrality of
    /// `g_i * row_i(H)`, label membership) is left to the verification
    /// suite so that corrupted inputs can be loaded and then diagnosed.
    pub fn from_parts(
        g: Vec<u64>,
        h: Vec<Vec<Rational>>,
        p_sq: Vec<Rational>,
        c_sq: Vec<Rational>,
        labels: Vec<GroupElement>,
    ) -> Result<Self> {
        let r = g.len();
        if r == 0 {
            return Err(Error::EmptyGroup);
        }
        if let Some(i) = g.iter().position(|&gi| gi == 0) {
            return Err(Error::ZeroOrder(i));
        }
        for (name, len) in [("H", h.len()), ("P_sq", p_sq.len()), ("C_sq", c_sq.len())] {
            if len != r {
                return Err(Error::Inconsistent(format!(
                    "{name} has {len} rows, expected {r}"
                )));
            }
        }
        if h.iter().any(|row| row.len() != r) {
            return Err(Error::Inconsistent("H is not square".into()));
        }
        for i in 0..r {
            if !p_sq[i].is_positive() || !c_sq[i].is_positive() {
                return Err(Error::Inconsistent(format!(
                    "scale factors must be positive on axis {i}"
                )));
            }
            let gi = rat(g[i] as i64);
            if c_sq[i] != &gi * &gi * &p_sq[i] {
                return Err(Error::Inconsistent(format!(
                    "C_sq != g^2 * P_sq on axis {i}"
                )));
            }
        }
        for label in &labels {
            if label.0.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: label.0.len(),
                });
            }
            for (i, (&v, &o)) in label.0.iter().zip(&g).enumerate() {
                if v >= o {
                    return Err(Error::ComponentOutOfRange {
                        index: i,
                        value: v,
                        order: o,
                    });
                }
            }
        }
        // Gauge: normsq carries the squared projection determinant.
        let c: Vec<Rational> = g.iter().map(|&gi| rat(gi as i64)).collect();
        Ok(LatticeProfile {
            g,
            p: vec![Rational::one(); r],
            c,
            normsq: p_sq,
            h,
            labels,
        })
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.g
    }

    pub fn group_spec(&self) -> GroupSpec {
        GroupSpec::new(self.g.clone()).expect("validated orders")
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn normsq(&self) -> &[Rational] {
        &self.normsq
    }

    pub fn h(&self) -> &[Vec<Rational>] {
        &self.h
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    /// Squared projection determinant on axis `i`.
    pub fn p_sq(&self, i: usize) -> Rational {
        &self.p[i] * &self.p[i] * &self.normsq[i]
    }

    /// Squared cross-section determinant on axis `i`.
    pub fn c_sq(&self, i: usize) -> Rational {
        &self.c[i] * &self.c[i] * &self.normsq[i]
    }

    /// Projection determinant as a float (the decoder's step size).
    pub fn proj_len(&self, i: usize) -> f64 {
        to_f64(&self.p_sq(i)).sqrt()
    }

    /// Cross-section determinant as a float.
    pub fn cross_len(&self, i: usize) -> f64 {
        to_f64(&self.c_sq(i)).sqrt()
    }

    pub fn syndrome(&self, a: &GroupElement) -> Result<Syndrome> {
        syndrome::of_element(&self.h, a)
    }

    pub fn is_codeword(&self, a: &GroupElement) -> Result<bool> {
        syndrome::is_codeword(&self.h, a)
    }
}

impl PartialEq for LatticeProfile {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g
            && self.h == other.h
            && self.labels == other.labels
            && (0..self.g.len()).all(|i| {
                self.p_sq(i) == other.p_sq(i) && self.c_sq(i) == other.c_sq(i)
            })
    }
}
