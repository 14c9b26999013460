//! Brute-force verification oracle.
//!
//! Everything in this module works with explicit permutations and dense
//! matrices, deliberately sharing no code path with the character-theoretic
//! engine: the adjacency matrix of `Cay(S_n, S)` is materialized vertex by
//! vertex and handed to a dense symmetric eigensolver, connectivity is
//! checked by breadth-first search, and permutation signs come from
//! inversion counts. Group elements are indexed by their Lehmer code
//! (factorial number system), so vertex `i` of the graph is `unrank(n, i)`.
//!
//! The adjacency matrix has order `n!`, which caps the whole module at
//! `n <= 7` (matrix order 5040).

use std::collections::{HashSet, VecDeque};

use nalgebra::DMatrix;
use num::bigint::BigUint;
use num::ToPrimitive;

use crate::connection_sets::ConnectionSetSpec;
use crate::error::Error;
use crate::partitions::Partition;
use crate::spectra::Spectrum;

/// Largest `n` the dense-matrix routines accept (`7! = 5040` vertices).
pub const MAX_BRUTE_FORCE_N: usize = 7;

// ============================================================================
// Permutations
// ============================================================================

/// A permutation of `{0, .., n-1}` stored as its image list:
/// `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from an image list, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 0..{n}: {images:?}"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Group product `self * rhs`, composing as functions:
    /// `(self * rhs)(i) = self(rhs(i))`. Right-multiplying a vertex `g` by
    /// a generator `s` is `g.mul(s)`.
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: rhs.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Cycle type as a partition of `n` (fixed points contribute parts of
    /// size 1).
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths form a partition")
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i == v)
            .count()
    }

    /// Sign computed by counting inversions, independently of any cycle
    /// arithmetic: `(-1)^#{i < j : images[i] > images[j]}`.
    pub fn sign_by_inversions(&self) -> i32 {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lehmer-code rank of the permutation among all of `S_n`, in
    /// lexicographic order of image lists: `rank(identity) = 0`,
    /// `0 <= rank < n!`.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count() as u64;
            rank = rank * (n - i) as u64 + smaller_later;
        }
        rank
    }
}

/// Inverse of [`Permutation::rank`]: the permutation of `{0, .., n-1}` with
/// the given lexicographic rank. `n <= 20` (so `n!` fits `u64`) and
/// `rank < n!`.
pub fn unrank(n: usize, rank: u64) -> Result<Permutation, Error> {
    if n == 0 || n > 20 {
        return Err(Error::InvalidInput(format!(
            "unrank supports 1 <= n <= 20, got {n}"
        )));
    }
    let order = small_factorial(n);
    if rank >= order {
        return Err(Error::InvalidInput(format!(
            "rank {rank} out of range for S_{n} (order {order})"
        )));
    }
    let mut digits = Vec::with_capacity(n);
    let mut r = rank;
    for base in 1..=n as u64 {
        digits.push((r % base) as usize);
        r /= base;
    }
    digits.reverse(); // digits[i] in 0..(n-i)
    let mut pool: Vec<usize> = (0..n).collect();
    let images = digits.iter().map(|&d| pool.remove(d)).collect();
    Ok(Permutation { images })
}

/// All of `S_n` in rank order. Intended for small `n`; the iterator is
/// lazy, but `n!` elements is only practical up to `n` around 10.
pub fn all_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>, Error> {
    if n == 0 || n > 20 {
        return Err(Error::InvalidInput(format!(
            "enumeration supports 1 <= n <= 20, got {n}"
        )));
    }
    let order = small_factorial(n);
    Ok((0..order).map(move |r| unrank(n, r).expect("rank in range")))
}

fn small_factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

// ============================================================================
// Graph expansion
// ============================================================================

fn check_capacity(spec: &ConnectionSetSpec) -> Result<(), Error> {
    if spec.n() > MAX_BRUTE_FORCE_N {
        return Err(Error::OracleCapacity(format!(
            "brute force needs n <= {MAX_BRUTE_FORCE_N}, got n = {}",
            spec.n()
        )));
    }
    Ok(())
}

/// Expands a connection set into the explicit list of its permutations, in
/// rank order. Only for `n <=` [`MAX_BRUTE_FORCE_N`].
pub fn expand_set(spec: &ConnectionSetSpec) -> Result<Vec<Permutation>, Error> {
    check_capacity(spec)?;
    let classes: HashSet<&Partition> = spec.classes().iter().collect();
    Ok(all_permutations(spec.n())?
        .filter(|g| classes.contains(&g.cycle_type()))
        .collect())
}

/// Number of connected components of `Cay(S_n, S)`, by breadth-first
/// search over all `n!` vertices.
pub fn component_count(spec: &ConnectionSetSpec) -> Result<usize, Error> {
    check_capacity(spec)?;
    let n = spec.n();
    let generators = expand_set(spec)?;
    let order = small_factorial(n) as usize;
    let mut seen = vec![false; order];
    let mut components = 0;
    for start in 0..order {
        if seen[start] {
            continue;
        }
        components += 1;
        bfs_mark(n, start, &generators, &mut seen);
    }
    Ok(components)
}

/// Order of the subgroup generated by the connection set: the size of the
/// identity's connected component.
pub fn subgroup_closure(spec: &ConnectionSetSpec) -> Result<u64, Error> {
    check_capacity(spec)?;
    let n = spec.n();
    let generators = expand_set(spec)?;
    let order = small_factorial(n) as usize;
    let mut seen = vec![false; order];
    let identity_rank = Permutation::identity(n).rank() as usize;
    Ok(bfs_mark(n, identity_rank, &generators, &mut seen) as u64)
}

/// Marks the component of `start`; returns its size.
fn bfs_mark(n: usize, start: usize, generators: &[Permutation], seen: &mut [bool]) -> usize {
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut size = 0;
    while let Some(rank) = queue.pop_front() {
        size += 1;
        let g = unrank(n, rank as u64).expect("rank in range");
        for s in generators {
            let neighbor = g.mul(s).rank() as usize;
            if !seen[neighbor] {
                seen[neighbor] = true;
                queue.push_back(neighbor);
            }
        }
    }
    size
}

// ============================================================================
// Numeric spectrum
// ============================================================================

/// Eigenvalues of the adjacency matrix of `Cay(S_n, S)` computed by a dense
/// symmetric eigensolver, sorted descending, with multiplicity (length
/// `n!`). Only for `n <=` [`MAX_BRUTE_FORCE_N`].
pub fn numeric_spectrum(spec: &ConnectionSetSpec) -> Result<Vec<f64>, Error> {
    check_capacity(spec)?;
    let n = spec.n();
    let generators = expand_set(spec)?;
    let order = small_factorial(n) as usize;
    let mut adjacency = DMatrix::<f64>::zeros(order, order);
    for rank in 0..order {
        let g = unrank(n, rank as u64).expect("rank in range");
        for s in &generators {
            adjacency[(rank, g.mul(s).rank() as usize)] = 1.0;
        }
    }
    for i in 0..order {
        for j in i + 1..order {
            if adjacency[(i, j)] != adjacency[(j, i)] {
                return Err(Error::Internal(format!(
                    "adjacency not symmetric at ({i}, {j}); connection set not inverse-closed?"
                )));
            }
        }
    }
    let mut eigenvalues: Vec<f64> = adjacency.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_unstable_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    Ok(eigenvalues)
}

// ============================================================================
// Spectrum comparison
// ============================================================================

/// Outcome of matching an exact spectrum against a numeric one.
#[derive(Clone, Debug)]
pub struct MatchReport {
    /// Whether every eigenvalue agreed within `tolerance`.
    pub matched: bool,
    /// Largest absolute deviation seen across all `n!` positions.
    pub max_deviation: f64,
    /// Position (in the descending list) of the first deviation beyond
    /// tolerance, if any.
    pub first_mismatch: Option<usize>,
    /// The tolerance used.
    pub tolerance: f64,
}

/// Compares an exact spectrum with a numeric eigenvalue list.
///
/// The exact spectrum is expanded to a descending multiset (each value
/// repeated by its multiplicity) and matched positionally against the
/// sorted numeric list. A total-multiplicity disagreement is a structural
/// error, not a tolerance failure.
pub fn compare_spectra(
    exact: &Spectrum,
    numeric: &[f64],
    tolerance: f64,
) -> Result<MatchReport, Error> {
    let total: BigUint = exact
        .lines
        .iter()
        .map(|line| line.multiplicity.clone())
        .sum();
    let total = total
        .to_usize()
        .ok_or_else(|| Error::Internal("total multiplicity exceeds usize".into()))?;
    if total != numeric.len() {
        return Err(Error::StructuralMismatch(format!(
            "exact multiplicities sum to {total} but numeric spectrum has {} entries",
            numeric.len()
        )));
    }
    let mut sorted = numeric.to_vec();
    sorted.sort_unstable_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    let mut max_deviation = 0.0f64;
    let mut first_mismatch = None;
    let mut idx = 0;
    for line in &exact.lines {
        let value = line
            .value
            .to_f64()
            .ok_or_else(|| Error::Internal("eigenvalue does not fit f64".into()))?;
        let mult = line
            .multiplicity
            .to_usize()
            .ok_or_else(|| Error::Internal("multiplicity exceeds usize".into()))?;
        for _ in 0..mult {
            let deviation = (value - sorted[idx]).abs();
            max_deviation = max_deviation.max(deviation);
            if deviation > tolerance && first_mismatch.is_none() {
                first_mismatch = Some(idx);
            }
            idx += 1;
        }
    }
    Ok(MatchReport {
        matched: first_mismatch.is_none(),
        max_deviation,
        first_mismatch,
        tolerance,
    })
}

// ============================================================================
// Tests
// ============================================================================
