//! Coset-leader table built by ascending monomial enumeration.
//!
//! The enumeration starts from the empty monomial and walks a worklist kept
//! sorted by the term order. Only irredundant monomials (every single-variable
//! quotient already a recorded leader) are examined: a new syndrome founds a
//! coset record, and a repeat syndrome at the founding degree appends another
//! leader and re-seeds the worklist with its variable multiples. The worklist
//! therefore never leaves the set of leader multiples, which keeps it finite.

use crate::error::Result;
use crate::group::{GroupElement, GroupSpec, Monomial};
use crate::order::TermOrder;
use crate::profile::LatticeProfile;
use crate::rational::Rational;
use crate::syndrome::{self, Syndrome};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// One coset: its syndrome, every minimal-norm element in enumeration order,
/// and the shared norm.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetRecord {
    pub syndrome: Syndrome,
    pub leaders: Vec<GroupElement>,
    pub norm: u64,
}

/// Complete table of cosets keyed by canonical syndrome.
#[derive(Clone, Debug)]
pub struct CosetTable {
    spec: GroupSpec,
    h: Vec<Vec<Rational>>,
    order: TermOrder,
    records: Vec<CosetRecord>,
    index: BTreeMap<Syndrome, usize>,
    generator_syndromes: Vec<Syndrome>,
}

/// Enumeration counters: every monomial ever placed on the worklist and every
/// monomial appended to a leader list.
#[derive(Clone, Debug, Default)]
pub struct BuildTrace {
    pub inserted: BTreeSet<Monomial>,
    pub appended: BTreeSet<Monomial>,
}

pub fn build_coset_table(profile: &LatticeProfile, order: TermOrder) -> CosetTable {
    build_coset_table_traced(profile, order).0
}

pub fn build_coset_table_traced(
    profile: &LatticeProfile,
    order: TermOrder,
) -> (CosetTable, BuildTrace) {
    let spec = profile.group_spec();
    let h = profile.h().to_vec();
    let n = spec.rank();
    assert_eq!(order.rank(), n, "term order rank must match the group rank");

    let mut trace = BuildTrace::default();
    let mut records: Vec<CosetRecord> = Vec::new();
    let mut index: BTreeMap<Syndrome, usize> = BTreeMap::new();
    let mut leader_monos: HashSet<Vec<u64>> = HashSet::new();

    // Worklist keyed by the order's sort key; starts from the empty monomial.
    let mut list: BTreeSet<Vec<u64>> = BTreeSet::new();
    let one = Monomial::one(n);
    list.insert(order.sort_key(&one));
    trace.inserted.insert(one);

    while let Some(key) = list.pop_first() {
        let w = order.monomial_from_key(&key);

        // Irredundance: every single-variable quotient is a recorded leader.
        let irredundant = w
            .support()
            .all(|i| leader_monos.contains(&w.div_var(i).expect("supported var").0));
        if !irredundant {
            continue;
        }

        let s = syndrome::of_monomial(&h, &spec, &w).expect("matching dimensions");
        match index.get(&s) {
            Some(&j) => {
                let rec = &mut records[j];
                if rec.norm != 0 && w.degree() == rec.norm {
                    // Equal-degree repeat: another leader of the same coset.
                    for i in 0..n {
                        let prod = w.mul_var(i);
                        list.insert(order.sort_key(&prod));
                        trace.inserted.insert(prod);
                    }
                    leader_monos.insert(w.0.clone());
                    rec.leaders.push(spec.psi(&w));
                    trace.appended.insert(w);
                }
            }
            None => {
                let j = records.len();
                records.push(CosetRecord {
                    syndrome: s.clone(),
                    leaders: vec![spec.psi(&w)],
                    norm: w.degree(),
                });
                index.insert(s, j);
                for i in 0..n {
                    let prod = w.mul_var(i);
                    list.insert(order.sort_key(&prod));
                    trace.inserted.insert(prod);
                }
                leader_monos.insert(w.0.clone());
                trace.appended.insert(w);
            }
        }
    }

    let generator_syndromes = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            syndrome::of_monomial(&h, &spec, &Monomial(e)).expect("matching dimensions")
        })
        .collect();

    (
        CosetTable {
            spec,
            h,
            order,
            records,
            index,
            generator_syndromes,
        },
        trace,
    )
}

impl CosetTable {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn h(&self) -> &[Vec<Rational>] {
        &self.h
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Records in discovery order.
    pub fn records(&self) -> &[CosetRecord] {
        &self.records
    }

    pub fn record_count(&self) -> usize {
        self.records.len()
    }

    pub fn leader_count(&self) -> usize {
        self.records.iter().map(|r| r.leaders.len()).sum()
    }

    pub fn generator_syndromes(&self) -> &[Syndrome] {
        &self.generator_syndromes
    }

    pub fn record_of(&self, s: &Syndrome) -> Option<&CosetRecord> {
        self.index.get(s).map(|&j| &self.records[j])
    }

    /// Record of the coset of a group element. The table is complete, so the
    /// lookup always succeeds for elements of the right rank.
    pub fn record_for(&self, a: &GroupElement) -> Result<&CosetRecord> {
        let s = syndrome::of_element(&self.h, a)?;
        Ok(self
            .record_of(&s)
            .expect("complete table covers every coset"))
    }

    pub fn syndrome_of_monomial(&self, m: &Monomial) -> Result<Syndrome> {
        syndrome::of_monomial(&self.h, &self.spec, m)
    }

    /// Full leader list of the element's coset, in enumeration order.
    pub fn canonical_forms(&self, a: &GroupElement) -> Result<Vec<GroupElement>> {
        Ok(self.record_for(a)?.leaders.clone())
    }

    pub fn is_leader(&self, a: &GroupElement) -> Result<bool> {
        Ok(self.record_for(a)?.leaders.contains(a))
    }

    /// True iff every single-variable quotient of `m` is a coset leader.
    /// The empty monomial is irredundant vacuously.
    pub fn is_irredundant(&self, m: &Monomial) -> bool {
        m.support().all(|i| {
            let q = m.div_var(i).expect("supported var");
            if !self.spec.is_reduced(&q) {
                return false;
            }
            self.is_leader(&self.spec.psi(&q)).unwrap_or(false)
        })
    }
}
