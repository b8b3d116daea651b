//! Brute-force consistency oracles over small groups.
//!
//! Everything here recomputes table-level facts from first principles:
//! cosets by exhaustive syndrome grouping, the label code by subgroup
//! closure, and reductions against the leader lists. The oracles stay
//! independent of the enumeration that builds the table.

use crate::ecrgb::{build_ecrgb, reduce_full};
use crate::error::{Error, Result};
use crate::group::{g_norm, GroupElement, GroupSpec, Monomial};
use crate::order::TermOrder;
use crate::profile::LatticeProfile;
use crate::rational::{is_integer, rat};
use crate::syndrome::Syndrome;
use crate::table::{build_coset_table, CosetTable};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Upper bound on the group order for the exhaustive oracles.
    pub max_group_size: u128,
    /// The reduction sweep also covers capped exponent vectors when the
    /// group order stays below this bound.
    pub capped_sweep_bound: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_group_size: 10_000,
            capped_sweep_bound: 2_000,
        }
    }
}

/// Cosets by exhaustive enumeration: syndrome -> (minimal norm, all elements
/// attaining it).
pub fn brute_force_cosets(
    profile: &LatticeProfile,
) -> Result<BTreeMap<Syndrome, (u64, BTreeSet<GroupElement>)>> {
    let spec = profile.group_spec();
    let mut map: BTreeMap<Syndrome, (u64, BTreeSet<GroupElement>)> = BTreeMap::new();
    for a in spec.elements() {
        let s = profile.syndrome(&a)?;
        let norm = g_norm(&a);
        let entry = map.entry(s).or_insert_with(|| (u64::MAX, BTreeSet::new()));
        match norm.cmp(&entry.0) {
            std::cmp::Ordering::Less => {
                entry.0 = norm;
                entry.1 = BTreeSet::from([a]);
            }
            std::cmp::Ordering::Equal => {
                entry.1.insert(a);
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(map)
}

/// Closure of a generator set under the group addition.
pub fn subgroup_closure(spec: &GroupSpec, generators: &[GroupElement]) -> BTreeSet<GroupElement> {
    let mut closed: BTreeSet<GroupElement> = BTreeSet::from([spec.zero()]);
    let mut frontier: Vec<GroupElement> = vec![spec.zero()];
    while let Some(a) = frontier.pop() {
        for gen in generators {
            let next = spec.add(&a, gen);
            if closed.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    closed
}

fn check_leaders(profile: &LatticeProfile, table: &CosetTable) -> Result<PropertyReport> {
    let oracle = brute_force_cosets(profile)?;
    let mut detail = String::new();
    let mut passed = oracle.len() == table.record_count();
    if !passed {
        detail = format!(
            "{} cosets by enumeration, {} records in the table",
            oracle.len(),
            table.record_count()
        );
    } else {
        for rec in table.records() {
            let Some((norm, leaders)) = oracle.get(&rec.syndrome) else {
                passed = false;
                detail = format!("table syndrome {} not found by enumeration", rec.syndrome);
                break;
            };
            let table_set: BTreeSet<GroupElement> = rec.leaders.iter().cloned().collect();
            if *norm != rec.norm || *leaders != table_set || table_set.len() != rec.leaders.len() {
                passed = false;
                detail = format!("leader mismatch at syndrome {}", rec.syndrome);
                break;
            }
        }
    }
    Ok(PropertyReport {
        name: "coset-leaders",
        passed,
        detail,
    })
}

fn check_membership(profile: &LatticeProfile) -> Result<PropertyReport> {
    let spec = profile.group_spec();
    // Order consistency first: g_i * row_i(H) must be integral, otherwise
    // the syndrome map is not constant on cosets.
    for (i, row) in profile.h().iter().enumerate() {
        let gi = rat(profile.orders()[i] as i64);
        if row.iter().any(|e| !is_integer(&(e * &gi))) {
            return Ok(PropertyReport {
                name: "membership",
                passed: false,
                detail: format!("g[{i}] * row_{i}(H) is not integral"),
            });
        }
    }

    let codewords: BTreeSet<GroupElement> = {
        let mut set = BTreeSet::new();
        for a in spec.elements() {
            if profile.is_codeword(&a)? {
                set.insert(a);
            }
        }
        set
    };

    if !profile.labels().is_empty() {
        let generated = subgroup_closure(&spec, profile.labels());
        if generated != codewords {
            return Ok(PropertyReport {
                name: "membership",
                passed: false,
                detail: format!(
                    "subgroup generated by labels has {} elements, membership check admits {}",
                    generated.len(),
                    codewords.len()
                ),
            });
        }
    } else {
        // No generators available: the codeword set must still be closed.
        for a in &codewords {
            for b in &codewords {
                if !codewords.contains(&spec.add(a, b)) {
                    return Ok(PropertyReport {
                        name: "membership",
                        passed: false,
                        detail: format!("codeword set not closed under addition at {a} + {b}"),
                    });
                }
            }
        }
    }

    Ok(PropertyReport {
        name: "membership",
        passed: true,
        detail: format!("{} codewords", codewords.len()),
    })
}

fn check_ancestors(table: &CosetTable) -> Result<PropertyReport> {
    for rec in table.records() {
        for leader in &rec.leaders {
            let support: Vec<usize> = leader.support().collect();
            for mask in 0u32..(1u32 << support.len()) {
                let mut h = leader.clone();
                for (bit, &i) in support.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        h.0[i] = 0;
                    }
                }
                if !table.is_leader(&h)? {
                    return Ok(PropertyReport {
                        name: "ancestor-closure",
                        passed: false,
                        detail: format!("ancestor {h} of leader {leader} is not a leader"),
                    });
                }
            }
        }
    }
    Ok(PropertyReport {
        name: "ancestor-closure",
        passed: true,
        detail: String::new(),
    })
}

fn check_reduction(table: &CosetTable, opts: &VerifyOptions) -> Result<PropertyReport> {
    let spec = table.spec().clone();
    let basis = build_ecrgb(table);
    for a in spec.elements() {
        let expect: BTreeSet<Monomial> = table
            .canonical_forms(&a)?
            .iter()
            .map(|l| spec.monomial(l))
            .collect();
        let got = reduce_full(&spec.monomial(&a), &basis, table.order());
        if got != expect {
            return Ok(PropertyReport {
                name: "reduction-confluence",
                passed: false,
                detail: format!("reduction of {a} disagrees with the leader list"),
            });
        }
    }
    if spec.order_product() <= opts.capped_sweep_bound {
        // Sweep capped exponent vectors too: e_i ranges over 0..=g_i.
        let orders = spec.orders().to_vec();
        let mut e = vec![0u64; orders.len()];
        loop {
            let m = Monomial(e.clone());
            let expect: BTreeSet<Monomial> = table
                .canonical_forms(&spec.psi(&m))?
                .iter()
                .map(|l| spec.monomial(l))
                .collect();
            let got = reduce_full(&m, &basis, table.order());
            if got != expect {
                return Ok(PropertyReport {
                    name: "reduction-confluence",
                    passed: false,
                    detail: format!("reduction of capped monomial {m} disagrees"),
                });
            }
            let mut i = 0;
            loop {
                if i == e.len() {
                    break;
                }
                e[i] += 1;
                if e[i] <= orders[i] {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == e.len() {
                break;
            }
        }
    }
    Ok(PropertyReport {
        name: "reduction-confluence",
        passed: true,
        detail: String::new(),
    })
}

/// Runs the full oracle suite against a profile.
pub fn run_suite(
    profile: &LatticeProfile,
    order: TermOrder,
    opts: &VerifyOptions,
) -> Result<Vec<PropertyReport>> {
    let size = profile.group_spec().order_product();
    if size > opts.max_group_size {
        return Err(Error::Inconsistent(format!(
            "group order {size} exceeds the verification bound {}",
            opts.max_group_size
        )));
    }
    let table = build_coset_table(profile, order);
    Ok(vec![
        check_leaders(profile, &table)?,
        check_membership(profile)?,
        check_ancestors(&table)?,
        check_reduction(&table, opts)?,
    ])
}
