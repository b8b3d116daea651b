//! Nearest-point decoding along the chain axes.
//!
//! The target is quantized axis by axis: integer multiples of the
//! cross-section determinant peel off first, the remainder is measured in
//! projection steps and rounded to a group element `z`. The coset table then
//! lists every error pattern of minimal weight, and each surviving label
//! lifts back to a lattice point. Floats appear only here; all coset logic
//! stays exact.

use crate::error::{Error, Result};
use crate::group::{g_norm, l1_distance, GroupElement};
use crate::profile::LatticeProfile;
use crate::table::CosetTable;
use serde::Serialize;
use std::fmt;

/// Tie rule for the half-integer quantization boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Rounding {
    /// 0.5 rounds away from zero upward (the default).
    #[default]
    HalfUp,
    /// 0.5 rounds to the nearest even integer.
    HalfEven,
}

impl Rounding {
    fn round(self, x: f64) -> f64 {
        match self {
            Rounding::HalfUp => (x + 0.5).floor(),
            Rounding::HalfEven => {
                let r = x.round();
                if (x - x.trunc()).abs() == 0.5 {
                    let f = x.floor();
                    if (f as i64) % 2 == 0 {
                        f
                    } else {
                        f + 1.0
                    }
                } else {
                    r
                }
            }
        }
    }
}

/// Axis-wise quantization of a target.
#[derive(Clone, Debug, PartialEq)]
pub struct Quantization {
    /// Cross-section multiples peeled off per axis.
    pub k: Vec<i64>,
    /// Rounded group element.
    pub z: GroupElement,
    /// Remainders in projection-step units, before rounding.
    pub r_frac: Vec<f64>,
}

/// Which decoding branch produced a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// `z` is already a codeword.
    #[serde(rename = "codeword")]
    Codeword,
    /// The coset error has weight one.
    #[serde(rename = "unit-error")]
    UnitError,
    /// The direct error was strictly lighter.
    #[serde(rename = "e-smaller")]
    SmallerE,
    /// The reflected error was strictly lighter.
    #[serde(rename = "e-prime-smaller")]
    SmallerEPrime,
    /// Equal weights; the direct correction won the l1 comparison.
    #[serde(rename = "tie-e")]
    TieE,
    /// Equal weights; the reflected correction won the l1 comparison.
    #[serde(rename = "tie-e-prime")]
    TieEPrime,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Codeword => "codeword",
            Provenance::UnitError => "unit-error",
            Provenance::SmallerE => "e-smaller",
            Provenance::SmallerEPrime => "e-prime-smaller",
            Provenance::TieE => "tie-e",
            Provenance::TieEPrime => "tie-e-prime",
        };
        write!(f, "{s}")
    }
}

/// One decoded lattice point.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub label: GroupElement,
    pub point: Vec<f64>,
    pub l1_to_z: u64,
    pub l2_to_u: f64,
    pub provenance: Provenance,
}

/// Quantizes a target given in absolute lengths along the chain axes.
pub fn quantize(u: &[f64], profile: &LatticeProfile, rounding: Rounding) -> Result<Quantization> {
    let r = profile.rank();
    if u.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: u.len(),
        });
    }
    if let Some(i) = u.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFiniteTarget(i));
    }

    let mut k = Vec::with_capacity(r);
    let mut z = Vec::with_capacity(r);
    let mut r_frac = Vec::with_capacity(r);
    for (i, &ui) in u.iter().enumerate() {
        let cross = profile.cross_len(i);
        let proj = profile.proj_len(i);
        let gi = profile.orders()[i];
        let mut ki = (ui / cross).floor() as i64;
        let rem = ui - (ki as f64) * cross;
        let ri = rem / proj;
        let mut zi = (rounding.round(ri) as i64).max(0);
        // Rounding up across the full cross-section wraps into the next cell.
        if zi as u64 >= gi {
            zi = 0;
            ki += 1;
        }
        k.push(ki);
        z.push(zi as u64);
        r_frac.push(ri);
    }
    Ok(Quantization {
        k,
        z: GroupElement(z),
        r_frac,
    })
}

/// All nearest code labels to `z` with the branch that produced each.
///
/// `e` ranges over the leaders of `z`'s coset and `e'` over the leaders of
/// `-z`'s coset; the weight comparison picks a side per pair, an equal-weight
/// pair falls to the l1 comparison of the representatives (ties keep the
/// direct correction `z - e`). Duplicates collapse, first emission wins.
pub fn nearest_labels(
    z: &GroupElement,
    table: &CosetTable,
) -> Result<Vec<(GroupElement, Provenance)>> {
    let spec = table.spec();
    let e_list = table.canonical_forms(z)?;
    let e_norm = g_norm(&e_list[0]);

    let mut out: Vec<(GroupElement, Provenance)> = Vec::new();
    let push = |c: GroupElement, p: Provenance, out: &mut Vec<(GroupElement, Provenance)>| {
        if !out.iter().any(|(existing, _)| *existing == c) {
            out.push((c, p));
        }
    };

    if e_norm == 0 {
        out.push((z.clone(), Provenance::Codeword));
        return Ok(out);
    }
    if e_norm == 1 {
        for e in &e_list {
            push(spec.sub(z, e), Provenance::UnitError, &mut out);
        }
        return Ok(out);
    }

    let ep_list = table.canonical_forms(&spec.neg(z))?;
    let ep_norm = g_norm(&ep_list[0]);

    for e in &e_list {
        for ep in &ep_list {
            if e_norm < ep_norm {
                push(spec.sub(z, e), Provenance::SmallerE, &mut out);
            } else if e_norm > ep_norm {
                push(spec.add(z, ep), Provenance::SmallerEPrime, &mut out);
            } else {
                let c = spec.sub(z, e);
                let c0 = spec.add(z, ep);
                if l1_distance(z, &c) <= l1_distance(z, &c0) {
                    push(c, Provenance::TieE, &mut out);
                } else {
                    push(c0, Provenance::TieEPrime, &mut out);
                }
            }
        }
    }
    Ok(out)
}

/// Lifts a label back to a point: `v_i = k_i * |cross_i| + c_i * |proj_i|`.
pub fn lift(k: &[i64], c: &GroupElement, profile: &LatticeProfile) -> Vec<f64> {
    (0..profile.rank())
        .map(|i| (k[i] as f64) * profile.cross_len(i) + (c.0[i] as f64) * profile.proj_len(i))
        .collect()
}

fn l2(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Full decode: quantize, list nearest labels, lift, and sort ascending by
/// l2 distance to the target (stable, so equal distances keep emission
/// order).
pub fn decode(
    u: &[f64],
    profile: &LatticeProfile,
    table: &CosetTable,
    rounding: Rounding,
    max_candidates: Option<usize>,
) -> Result<Vec<Candidate>> {
    let q = quantize(u, profile, rounding)?;
    let labels = nearest_labels(&q.z, table)?;
    let mut candidates: Vec<Candidate> = labels
        .into_iter()
        .map(|(label, provenance)| {
            let point = lift(&q.k, &label, profile);
            Candidate {
                l1_to_z: l1_distance(&q.z, &label),
                l2_to_u: l2(&point, u),
                point,
                label,
                provenance,
            }
        })
        .collect();
    candidates.sort_by(|a, b| a.l2_to_u.partial_cmp(&b.l2_to_u).expect("finite distances"));
    if let Some(max) = max_candidates {
        candidates.truncate(max);
    }
    Ok(candidates)
}
