//! Extended complete reduced Groebner basis of a label code, and the
//! multi-valued monomial reduction it supports.
//!
//! The basis pairs every irredundant monomial with every leader of its coset
//! (skipping the self pair), and a monomial that is itself one leader of a
//! multi-leader coset contributes both orientations. A single basis therefore
//! serves every total-degree-compatible order under any variable permutation.

use crate::group::{GroupSpec, Monomial};
use crate::order::TermOrder;
use crate::table::CosetTable;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

/// Oriented pair of monomials with equal syndrome.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

#[derive(Clone, Debug)]
pub struct Ecrgb {
    spec: GroupSpec,
    order: TermOrder,
    binomials: BTreeSet<Binomial>,
}

/// Candidate monomials of the enumeration: the empty monomial plus every
/// leader multiplied by one variable.
fn irredundant_candidates(table: &CosetTable) -> BTreeSet<Monomial> {
    let n = table.spec().rank();
    let mut out = BTreeSet::new();
    out.insert(Monomial::one(n));
    for rec in table.records() {
        for leader in &rec.leaders {
            let mono = table.spec().monomial(leader);
            for i in 0..n {
                out.insert(mono.mul_var(i));
            }
        }
    }
    out
}

pub fn build_ecrgb(table: &CosetTable) -> Ecrgb {
    let spec = table.spec().clone();
    let mut binomials = BTreeSet::new();

    for m in irredundant_candidates(table) {
        if !table.is_irredundant(&m) {
            continue;
        }
        let image = spec.psi(&m);
        let rec = table
            .record_of(&table.syndrome_of_monomial(&m).expect("matching rank"))
            .expect("complete table");
        // A reduced monomial at the coset norm is itself one of the leaders;
        // those pairs carry both orientations.
        let both_ways = rec.norm != 0 && spec.is_reduced(&m) && m.degree() == rec.norm;
        for leader in &rec.leaders {
            if *leader == image {
                continue;
            }
            let tail = spec.monomial(leader);
            if both_ways {
                binomials.insert(Binomial {
                    lead: tail.clone(),
                    tail: m.clone(),
                });
            }
            binomials.insert(Binomial {
                lead: m.clone(),
                tail,
            });
        }
    }

    Ecrgb {
        spec,
        order: table.order().clone(),
        binomials,
    }
}

impl Ecrgb {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Binomial> {
        self.binomials.iter()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.binomials.contains(b)
    }

    /// One binomial per line, ascending in the construction order.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<&Binomial> = self.binomials.iter().collect();
        lines.sort_by(|a, b| {
            self.order
                .cmp(&a.lead, &b.lead)
                .then_with(|| self.order.cmp(&a.tail, &b.tail))
        });
        let mut out = String::new();
        for b in lines {
            out.push_str(&b.to_string());
            out.push('\n');
        }
        out
    }
}

/// Normalizes exponents below the orders by the cap rewrite `x_i^{g_i} -> 1`.
fn normalize(spec: &GroupSpec, m: &Monomial) -> Monomial {
    Monomial(
        m.0.iter()
            .zip(spec.orders())
            .map(|(&e, &o)| e % o)
            .collect(),
    )
}

/// Exhaustive reduction of a monomial by the basis: all leaders of its coset.
///
/// Descends with degree-decreasing rewrites plus equal-degree rewrites that
/// strictly decrease the given order (so the descent terminates), then
/// spreads across the co-minimal class with equal-degree rewrites under a
/// visited set. Intermediate results are cap-normalized throughout.
pub fn reduce_full(m: &Monomial, basis: &Ecrgb, order: &TermOrder) -> BTreeSet<Monomial> {
    let spec = &basis.spec;
    let start = normalize(spec, m);

    let mut visited: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);
    let mut min_degree = u64::MAX;

    while let Some(t) = queue.pop_front() {
        min_degree = min_degree.min(t.degree());
        for b in &basis.binomials {
            if !b.lead.divides(&t) {
                continue;
            }
            let next = normalize(spec, &t.rewrite(&b.lead, &b.tail));
            let allowed = match next.degree().cmp(&t.degree()) {
                Ordering::Less => true,
                Ordering::Equal => order.cmp(&next, &t) == Ordering::Less,
                Ordering::Greater => false,
            };
            if allowed && !visited.contains(&next) {
                visited.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    // Equal-degree rewrites cycle inside the minimal class; the visited set
    // turns the cycling into a closure.
    let mut result: BTreeSet<Monomial> = visited
        .iter()
        .filter(|t| t.degree() == min_degree)
        .cloned()
        .collect();
    let mut queue: VecDeque<Monomial> = result.iter().cloned().collect();
    while let Some(t) = queue.pop_front() {
        for b in &basis.binomials {
            if b.lead.degree() != b.tail.degree() || !b.lead.divides(&t) {
                continue;
            }
            let next = normalize(spec, &t.rewrite(&b.lead, &b.tail));
            if next.degree() == min_degree && !result.contains(&next) {
                result.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    result
}

/// Extracts the reduced basis for one order from the table: the canonical set
/// `N` holds the order-least leader of each coset, the leads are the
/// divisibility-minimal reduced monomials outside `N`, and each lead pairs
/// with its coset's order-least leader. The output is always contained in
/// the extended basis.
pub fn reduced_groebner_for_order(table: &CosetTable, order: &TermOrder) -> BTreeSet<Binomial> {
    let spec = table.spec();
    let n = spec.rank();

    // N: order-least leader monomial per coset.
    let mut canon: HashSet<Monomial> = HashSet::new();
    for rec in table.records() {
        let monos: Vec<Monomial> = rec.leaders.iter().map(|l| spec.monomial(l)).collect();
        let least = order.min(&monos).expect("nonempty leader list").clone();
        canon.insert(least);
    }

    let mut out = BTreeSet::new();
    for rec in table.records() {
        for leader in &rec.leaders {
            let mono = spec.monomial(leader);
            for i in 0..n {
                let t = mono.mul_var(i);
                if !spec.is_reduced(&t) || canon.contains(&t) {
                    continue;
                }
                let minimal = t
                    .support()
                    .all(|v| canon.contains(&t.div_var(v).expect("supported var")));
                if !minimal {
                    continue;
                }
                let trec = table
                    .record_of(&table.syndrome_of_monomial(&t).expect("matching rank"))
                    .expect("complete table");
                let tails: Vec<Monomial> =
                    trec.leaders.iter().map(|l| spec.monomial(l)).collect();
                let tail = order.min(&tails).expect("nonempty leader list").clone();
                out.insert(Binomial { lead: t, tail });
            }
        }
    }
    out
}
