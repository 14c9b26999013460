//! Connection sets for normal Cayley graphs on `S_n`.
//!
//! A connection set here is always a union of non-identity conjugacy
//! classes, described symbolically by a [`Selector`] and resolved against a
//! concrete `n` into a [`ConnectionSetSpec`] listing the class cycle types.
//! The supported families:
//!
//! * `class:<partition>` - a single conjugacy class;
//! * `TI:<t1>,<t2>,...` - `T(n, I)`: permutations whose support size
//!   (number of non-fixed points) lies in the set `I`;
//! * `Tk:<k>` - `T(n, {2..k})`: support size at most `k`;
//! * `F:<k>` - `F(n, k)`: permutations with exactly `k` fixed points;
//! * `D` - the derangements (no fixed points);
//! * `custom:<p1>;<p2>;...` - an explicit union of classes.
//!
//! Sets are never materialized as permutation lists here; the exact
//! spectrum only needs the cycle types and their class sizes. The
//! brute-force oracle expands them when asked.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::ToPrimitive;

use crate::error::Error;
use crate::oracle;
use crate::partitions::{
    canonical_sort, class_size, enumerate_partitions, factorial, ClassDescriptor, Partition,
};

// ============================================================================
// Selector grammar
// ============================================================================

/// Symbolic, `n`-independent description of a connection-set family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// One conjugacy class, by cycle type.
    Single(Partition),
    /// Support size in the given set (`T(n, I)`).
    SupportIn(BTreeSet<usize>),
    /// Support size between 2 and `k` (`T(n, {2..k})`).
    SupportUpTo(usize),
    /// Exactly `k` fixed points (`F(n, k)`).
    Fixing(usize),
    /// No fixed points at all.
    Derangements,
    /// Explicit union of classes.
    Custom(Vec<Partition>),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Single(gamma) => write!(f, "class:{gamma}"),
            Selector::SupportIn(set) => {
                write!(f, "TI:")?;
                let mut first = true;
                for t in set {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                    first = false;
                }
                Ok(())
            }
            Selector::SupportUpTo(k) => write!(f, "Tk:{k}"),
            Selector::Fixing(k) => write!(f, "F:{k}"),
            Selector::Derangements => write!(f, "D"),
            Selector::Custom(classes) => {
                write!(f, "custom:")?;
                let mut first = true;
                for gamma in classes {
                    if !first {
                        write!(f, ";")?;
                    }
                    write!(f, "{gamma}")?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "D" {
            return Ok(Selector::Derangements);
        }
        let (keyword, body) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSelector(format!("unrecognized selector {s:?}")))?;
        match keyword {
            "class" => {
                Ok(Selector::Single(body.parse().map_err(|e| {
                    Error::InvalidSelector(format!("in {s:?}: {e}"))
                })?))
            }
            "TI" => {
                let mut set = BTreeSet::new();
                for token in body.split(',') {
                    let t: usize = token.trim().parse().map_err(|_| {
                        Error::InvalidSelector(format!("bad support size {token:?} in {s:?}"))
                    })?;
                    if t < 2 {
                        return Err(Error::InvalidSelector(format!(
                            "support size {t} impossible in {s:?} (a non-identity permutation moves at least 2 points)"
                        )));
                    }
                    set.insert(t);
                }
                if set.is_empty() {
                    return Err(Error::InvalidSelector(format!(
                        "empty support set in {s:?}"
                    )));
                }
                Ok(Selector::SupportIn(set))
            }
            "Tk" => {
                let k: usize = body
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSelector(format!("bad bound {body:?} in {s:?}")))?;
                if k < 2 {
                    return Err(Error::InvalidSelector(format!(
                        "bound {k} in {s:?} leaves no classes (need k >= 2)"
                    )));
                }
                Ok(Selector::SupportUpTo(k))
            }
            "F" => {
                let k: usize = body.trim().parse().map_err(|_| {
                    Error::InvalidSelector(format!("bad fixed-point count {body:?} in {s:?}"))
                })?;
                Ok(Selector::Fixing(k))
            }
            "custom" => {
                let mut classes = Vec::new();
                for token in body.split(';') {
                    classes.push(
                        token
                            .parse()
                            .map_err(|e| Error::InvalidSelector(format!("in {s:?}: {e}")))?,
                    );
                }
                Ok(Selector::Custom(classes))
            }
            other => Err(Error::InvalidSelector(format!(
                "unknown selector kind {other:?} in {s:?}"
            ))),
        }
    }
}

// ============================================================================
// Resolved connection sets
// ============================================================================

/// A selector resolved against a concrete `n`: the list of class cycle
/// types making up the connection set, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSetSpec {
    n: usize,
    selector: Selector,
    classes: Vec<Partition>,
}

impl ConnectionSetSpec {
    /// Resolves `selector` in `S_n`, validating every range: partitions
    /// must partition `n`, the identity class is never allowed, support
    /// sizes must be at most `n`, and `F:<k>` needs `k <= n - 2` (with
    /// `n - 1` fixed points the last point is fixed too).
    pub fn build(n: usize, selector: Selector) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "S_{n} has no non-identity classes"
            )));
        }
        let classes = match &selector {
            Selector::Single(gamma) => {
                check_member(n, gamma)?;
                vec![gamma.clone()]
            }
            Selector::SupportIn(set) => {
                if let Some(&t) = set.iter().find(|&&t| t > n) {
                    return Err(Error::InvalidInput(format!(
                        "support size {t} exceeds n = {n}"
                    )));
                }
                filter_classes(n, |gamma| set.contains(&gamma.support_size()))?
            }
            Selector::SupportUpTo(k) => {
                if *k > n {
                    return Err(Error::InvalidInput(format!(
                        "support bound {k} exceeds n = {n}"
                    )));
                }
                filter_classes(n, |gamma| gamma.support_size() <= *k)?
            }
            Selector::Fixing(k) => {
                if *k + 2 > n {
                    return Err(Error::InvalidInput(format!(
                        "cannot fix exactly {k} of {n} points (needs k <= n - 2)"
                    )));
                }
                filter_classes(n, |gamma| gamma.count_of(1) == *k)?
            }
            Selector::Derangements => filter_classes(n, |gamma| gamma.count_of(1) == 0)?,
            Selector::Custom(list) => {
                if list.is_empty() {
                    return Err(Error::InvalidInput("empty custom class list".into()));
                }
                let mut classes = Vec::new();
                for gamma in list {
                    check_member(n, gamma)?;
                    if !classes.contains(gamma) {
                        classes.push(gamma.clone());
                    }
                }
                canonical_sort(&mut classes);
                classes
            }
        };
        debug_assert!(!classes.is_empty());
        Ok(ConnectionSetSpec {
            n,
            selector,
            classes,
        })
    }

    /// The symmetric group degree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The selector this spec was built from.
    pub fn selector(&self) -> &Selector {
        &self.selector
    }

    /// The class cycle types, canonically ordered (descending
    /// lexicographic).
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    /// Per-class descriptors (cycle type, class size, sign).
    pub fn class_descriptors(&self) -> Vec<ClassDescriptor> {
        self.classes
            .iter()
            .map(|gamma| ClassDescriptor::new(self.n, gamma).expect("classes are validated"))
            .collect()
    }

    /// Total number of permutations in the connection set, i.e. the degree
    /// of the Cayley graph.
    pub fn set_size(&self) -> BigUint {
        self.classes
            .iter()
            .map(|gamma| class_size(self.n, gamma).expect("classes are validated"))
            .sum()
    }

    /// Index `t = [S_n : <S>]` of the subgroup generated by the set.
    ///
    /// For `n >= 5` the only proper nontrivial normal subgroup of `S_n` is
    /// `A_n`, and the subgroup generated by a union of classes is normal,
    /// so `t = 2` when every class is even and `t = 1` otherwise. For
    /// `n <= 4` (where `S_4` also has the Klein four-group as a normal
    /// subgroup) the index is computed by brute-force closure.
    pub fn generated_index(&self) -> Result<u64, Error> {
        if self.n >= 5 {
            return Ok(if self.classes.iter().all(|g| g.sign() == 1) {
                2
            } else {
                1
            });
        }
        let order = oracle::subgroup_closure(self)?;
        let group = factorial(self.n)
            .to_u64()
            .expect("n <= 4 group order fits u64");
        Ok(group / order)
    }
}

impl fmt::Display for ConnectionSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.selector)
    }
}

fn check_member(n: usize, gamma: &Partition) -> Result<(), Error> {
    if gamma.n() != n {
        return Err(Error::InvalidInput(format!(
            "class {gamma} is a partition of {}, not of n = {n}",
            gamma.n()
        )));
    }
    if gamma.is_identity_class() {
        return Err(Error::InvalidInput(
            "the identity class is not allowed in a connection set".into(),
        ));
    }
    Ok(())
}

fn filter_classes<F>(n: usize, keep: F) -> Result<Vec<Partition>, Error>
where
    F: Fn(&Partition) -> bool,
{
    let classes: Vec<Partition> = enumerate_partitions(n)?
        .into_iter()
        .filter(|gamma| !gamma.is_identity_class() && keep(gamma))
        .collect();
    if classes.is_empty() {
        return Err(Error::InvalidInput(
            "selector matches no non-identity class".into(),
        ));
    }
    Ok(classes)
}

// ============================================================================
// Tests
// ============================================================================
