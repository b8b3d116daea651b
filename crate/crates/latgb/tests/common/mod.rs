//! Shared fixtures for the integration suites.

use latgb::profile::{Basis, LatticeProfile};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn a4_basis() -> Basis {
    Basis::from_integers(&[
        vec![-1, 1, 0, 0, 0],
        vec![0, -1, 1, 0, 0],
        vec![0, 0, -1, 1, 0],
        vec![0, 0, 0, -1, 1],
    ])
    .unwrap()
}

pub fn d4_basis() -> Basis {
    Basis::from_integers(&[
        vec![1, 1, 0, 0],
        vec![1, 0, 1, 0],
        vec![1, 1, 1, 1],
        vec![2, 0, 0, 0],
    ])
    .unwrap()
}

/// Deterministic random integer bases of rank 2-3 with entries in [-4, 4]
/// and group order at most `max_group`, paired with their profiles.
pub fn random_instances(
    seed: u64,
    count: usize,
    max_group: u128,
) -> Vec<(Vec<Vec<i64>>, LatticeProfile)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rank = rng.gen_range(2..=3usize);
        let dim = rank + rng.gen_range(0..=1usize);
        let rows: Vec<Vec<i64>> = (0..rank)
            .map(|_| (0..dim).map(|_| rng.gen_range(-4..=4i64)).collect())
            .collect();
        let Ok(basis) = Basis::from_integers(&rows) else {
            continue;
        };
        let Ok(profile) = LatticeProfile::derive(&basis) else {
            continue;
        };
        if profile.group_spec().order_product() > max_group {
            continue;
        }
        out.push((rows, profile));
    }
    out
}
