//! Helpers shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use snspec::connection_sets::{ConnectionSetSpec, Selector};
use snspec::partitions::{enumerate_partitions, Partition};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn sel(s: &str) -> Selector {
    s.parse().unwrap()
}

pub fn build(n: usize, s: &str) -> ConnectionSetSpec {
    ConnectionSetSpec::build(n, sel(s)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random nonempty subset of `low..=high`.
pub fn random_support_set(rng: &mut ChaCha8Rng, low: usize, high: usize) -> BTreeSet<usize> {
    loop {
        let set: BTreeSet<usize> = (low..=high).filter(|_| rng.gen_bool(0.5)).collect();
        if !set.is_empty() {
            return set;
        }
    }
}

/// A random subset of `low..=high` with exactly `size` elements.
pub fn random_support_set_of_size(
    rng: &mut ChaCha8Rng,
    low: usize,
    high: usize,
    size: usize,
) -> BTreeSet<usize> {
    assert!(size <= high - low + 1);
    let mut set = BTreeSet::new();
    while set.len() < size {
        set.insert(rng.gen_range(low..=high));
    }
    set
}

/// All `k`-element subsets of `items`.
pub fn k_subsets(items: &[usize], k: usize) -> Vec<BTreeSet<usize>> {
    if k == 0 {
        return vec![BTreeSet::new()];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in k_subsets(&items[i + 1..], k - 1) {
            rest.insert(first);
            out.push(rest);
        }
    }
    out
}

/// The connection-set battery for one `n`: every single class, every
/// `T(n, k)`, every `F(n, k)`, the derangements, and `extra_random`
/// seeded random `T(n, I)` sets.
pub fn battery(n: usize, extra_random: usize, seed: u64) -> Vec<ConnectionSetSpec> {
    let mut specs = Vec::new();
    for gamma in enumerate_partitions(n).unwrap() {
        if !gamma.is_identity_class() {
            specs.push(ConnectionSetSpec::build(n, Selector::Single(gamma)).unwrap());
        }
    }
    for k in 2..=n {
        specs.push(ConnectionSetSpec::build(n, Selector::SupportUpTo(k)).unwrap());
    }
    for k in 0..=n - 2 {
        specs.push(ConnectionSetSpec::build(n, Selector::Fixing(k)).unwrap());
    }
    specs.push(ConnectionSetSpec::build(n, Selector::Derangements).unwrap());
    let mut rng = rng(seed);
    for _ in 0..extra_random {
        let support = random_support_set(&mut rng, 2, n);
        specs.push(ConnectionSetSpec::build(n, Selector::SupportIn(support)).unwrap());
    }
    specs
}
