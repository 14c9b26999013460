//! Integer partitions and conjugacy-class combinatorics for `S_n`.
//!
//! A partition of `n` plays two roles in this crate: as a *cycle type* it
//! labels a conjugacy class of the symmetric group `S_n`, and as a *shape*
//! it labels an irreducible representation. This module owns the shared
//! plumbing for both readings: enumeration, conjugation, the cycle-count
//! view, exact class sizes, class signs, and derangement counts.
//!
//! All counts are exact: `n!` outgrows `u64` at `n = 21`, and class sizes
//! and multiplicities feed exact rational eigenvalue computations, so
//! everything here returns big integers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::One;

use crate::error::Error;

// ============================================================================
// Partition
// ============================================================================

/// A partition of a positive integer: a weakly decreasing list of positive
/// parts.
///
/// The canonical order on partitions of the same `n` used everywhere in this
/// crate (enumeration order, achiever lists, cache files) is descending
/// lexicographic order on the part lists, so for `n = 4`:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
///
/// The derived `Ord` is plain lexicographic order on the parts; callers that
/// want the canonical order sort descending (see [`canonical_sort`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts, which must be nonempty, positive,
    /// and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned (the sum of the parts).
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the Young diagram / cycles of the class,
    /// fixed points included).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The conjugate (transposed) partition: row lengths of the diagram
    /// become column lengths.
    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: conjugate_parts(&self.parts),
        }
    }

    /// Cycle-count view of the partition as a cycle type: maps each part
    /// length `i` to `c_i`, the number of parts equal to `i`. Lengths that
    /// do not occur are absent.
    pub fn cycle_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// `c_i`: the number of parts equal to `i` (zero when absent).
    pub fn count_of(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Support size of the class: the number of non-fixed points,
    /// `n - c_1`.
    pub fn support_size(&self) -> usize {
        self.n() - self.count_of(1)
    }

    /// `true` when every part is 1, i.e. the cycle type of the identity.
    pub fn is_identity_class(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Sign of the permutations in this class: `(-1)^(n - #parts)`.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.num_parts()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Transpose a weakly decreasing part list.
pub(crate) fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let cols = parts.first().copied().unwrap_or(0);
    (0..cols)
        .map(|j| parts.iter().take_while(|&&p| p > j).count())
        .collect()
}

/// Sorts partitions into the crate's canonical order (descending
/// lexicographic on part lists).
pub fn canonical_sort(partitions: &mut [Partition]) {
    partitions.sort_unstable_by(|a, b| b.cmp(a));
}

impl fmt::Display for Partition {
    /// Canonical text form: comma-separated parts, no spaces, e.g.
    /// `3,1,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical text form, with an optional `base^exponent`
    /// shorthand per token: `"3,1,1,1"`, `"2^3"`, `"4,2^2,1^3"`. The
    /// expanded parts must still be weakly decreasing.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::InvalidPartition(format!("empty token in {s:?}")));
            }
            let (base, count) = match token.split_once('^') {
                Some((b, e)) => {
                    let count: usize = e.parse().map_err(|_| {
                        Error::InvalidPartition(format!("bad exponent in token {token:?}"))
                    })?;
                    if count == 0 {
                        return Err(Error::InvalidPartition(format!(
                            "zero exponent in token {token:?}"
                        )));
                    }
                    (b, count)
                }
                None => (token, 1),
            };
            let part: usize = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part in token {token:?}")))?;
            parts.extend(std::iter::repeat_n(part, count));
        }
        Partition::new(parts)
    }
}

// ============================================================================
// Conjugacy classes
// ============================================================================

/// A conjugacy class of `S_n` together with its precomputed size and sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDescriptor {
    /// Cycle type labeling the class.
    pub gamma: Partition,
    /// Number of elements in the class.
    pub size: BigUint,
    /// Common sign of the elements (`+1` or `-1`).
    pub sign: i32,
}

impl ClassDescriptor {
    /// Builds the descriptor for the class of cycle type `gamma` in `S_n`.
    pub fn new(n: usize, gamma: &Partition) -> Result<Self, Error> {
        Ok(ClassDescriptor {
            gamma: gamma.clone(),
            size: class_size(n, gamma)?,
            sign: gamma.sign(),
        })
    }
}

/// All partitions of `n` in canonical (descending lexicographic) order.
///
/// `n` must be at least 1.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, Error> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "partitions of 0 are not enumerated".into(),
        ));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        if part == remaining {
            out.push(Partition {
                parts: prefix.clone(),
            });
        } else {
            descend(remaining - part, part, prefix, out);
        }
        prefix.pop();
    }
}

/// `n!` as an exact big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Binomial coefficient `C(n, k)`, exactly (zero when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Size of the conjugacy class of cycle type `gamma` in `S_n`:
/// `n! / prod_i i^{c_i} c_i!`.
///
/// Errors when `gamma` is not a partition of `n`.
pub fn class_size(n: usize, gamma: &Partition) -> Result<BigUint, Error> {
    if gamma.n() != n {
        return Err(Error::InvalidInput(format!(
            "cycle type {gamma} is a partition of {}, not of n = {n}",
            gamma.n()
        )));
    }
    let mut centralizer = BigUint::one();
    for (i, c) in gamma.cycle_counts() {
        centralizer *= BigUint::from(i).pow(c as u32);
        centralizer *= factorial(c);
    }
    Ok(factorial(n) / centralizer)
}

/// Sign of the permutations of cycle type `gamma`: `(-1)^(n - #parts)`.
pub fn class_sign(gamma: &Partition) -> i32 {
    gamma.sign()
}

/// Number of derangements of `t` points, via the recurrence
/// `D(t) = t D(t-1) + (-1)^t` with `D(0) = 1`.
pub fn derangement_count(t: usize) -> BigUint {
    let mut d = BigInt::one();
    for k in 1..=t {
        d = BigInt::from(k) * d
            + if k % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
    }
    d.try_into().expect("derangement counts are nonnegative")
}

/// `E(t) - O(t)`: the number of even derangements of `t` points minus the
/// number of odd ones. Equals `(-1)^(t-1) (t - 1)` for `t >= 1`, and 1 for
/// `t = 0` (the empty permutation is an even derangement).
pub fn even_odd_derangement_gap(t: usize) -> BigInt {
    match t {
        0 => BigInt::one(),
        _ => {
            let gap = BigInt::from(t as i64 - 1);
            if t % 2 == 1 {
                gap
            } else {
                -gap
            }
        }
    }
}

// ============================================================================
// Tests
// ============================================================================
