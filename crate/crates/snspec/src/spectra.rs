//! Exact spectra of normal Cayley graphs on `S_n` and the Aldous-property
//! check.
//!
//! For a connection set `S` that is a union of conjugacy classes, every
//! irreducible shape `zeta` contributes one eigenvalue
//!
//! ```text
//! lambda_zeta = sum_over_classes |C| * chi_zeta(C) / dim(zeta)
//! ```
//!
//! with multiplicity `dim(zeta)^2`; the spectrum is the merge of these
//! values over all shapes. Everything is exact rational arithmetic; the
//! only floats in the crate live in the brute-force oracle.
//!
//! The Aldous property asks whether the strictly second largest eigenvalue
//! (the largest below the degree) is attained by the standard shape
//! `(n-1,1)`. Closed forms for the standard and sign eigenvalues of the
//! support-filtered sets `T(n, I)`, the `A(t) - B(t)` gap between their
//! level contributions, and two scan routines over all single classes
//! round out the module.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::{BigInt, BigUint};
use num::rational::Ratio;
use num::{BigRational, Zero};
use rayon::prelude::*;

use crate::characters::CharacterEngine;
use crate::connection_sets::{ConnectionSetSpec, Selector};
use crate::error::Error;
use crate::partitions::{
    binomial, class_size, derangement_count, enumerate_partitions, even_odd_derangement_gap,
    factorial, Partition,
};

// ============================================================================
// Spectrum
// ============================================================================

/// One distinct eigenvalue with its total multiplicity and the shapes that
/// attain it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumLine {
    /// The eigenvalue, exactly.
    pub value: BigRational,
    /// Sum of `dim(zeta)^2` over the achieving shapes.
    pub multiplicity: BigUint,
    /// The achieving shapes, in canonical order.
    pub achievers: Vec<Partition>,
}

/// The full spectrum of `Cay(S_n, S)`: distinct eigenvalues in descending
/// order, multiplicities summing to `n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// Symmetric group degree.
    pub n: usize,
    /// Graph degree `|S|`.
    pub degree: BigUint,
    /// Index of the subgroup generated by `S` (the number of connected
    /// components, and the multiplicity of the top eigenvalue).
    pub index_t: u64,
    /// Distinct eigenvalues, descending.
    pub lines: Vec<SpectrumLine>,
}

impl Spectrum {
    /// The top line (the degree).
    pub fn top(&self) -> &SpectrumLine {
        &self.lines[0]
    }

    /// The line of the strictly second largest eigenvalue (the largest
    /// value below the degree).
    pub fn strictly_second(&self) -> Result<&SpectrumLine, Error> {
        self.lines
            .get(1)
            .ok_or_else(|| Error::Internal("spectrum has a single eigenvalue".into()))
    }

    /// The smallest eigenvalue's line.
    pub fn min_line(&self) -> &SpectrumLine {
        self.lines.last().expect("spectra are never empty")
    }

    /// Checks the structural invariants every spectrum of a `|S|`-regular
    /// Cayley graph on `S_n` must satisfy: multiplicities sum to `n!`, the
    /// top eigenvalue is the degree with multiplicity `index_t`, the trace
    /// is zero, and the trace of the square is `n! * |S|`.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::Internal(msg));
        let order = factorial(self.n);
        let total: BigUint = self.lines.iter().map(|l| l.multiplicity.clone()).sum();
        if total != order {
            return fail(format!("multiplicities sum to {total}, want {order}"));
        }
        for pair in self.lines.windows(2) {
            if pair[0].value <= pair[1].value {
                return fail("eigenvalue lines not strictly descending".into());
            }
        }
        let top = self.top();
        if top.value != Ratio::from_integer(BigInt::from(self.degree.clone())) {
            return fail(format!("top eigenvalue {} is not the degree", top.value));
        }
        if top.multiplicity != BigUint::from(self.index_t) {
            return fail(format!(
                "top multiplicity {} differs from index {}",
                top.multiplicity, self.index_t
            ));
        }
        let mut trace = BigRational::zero();
        let mut square_trace = BigRational::zero();
        for line in &self.lines {
            let mult = Ratio::from_integer(BigInt::from(line.multiplicity.clone()));
            trace += &line.value * &mult;
            square_trace += &line.value * &line.value * mult;
        }
        if !trace.is_zero() {
            return fail(format!("trace {trace} is not zero"));
        }
        let expected = Ratio::from_integer(BigInt::from(order * self.degree.clone()));
        if square_trace != expected {
            return fail(format!("trace of square {square_trace} != n! * degree"));
        }
        Ok(())
    }
}

/// The exact eigenvalue contributed by the shape `zeta`:
/// `sum_over_classes |C| chi_zeta(C) / dim(zeta)`.
pub fn eigenvalue(
    engine: &CharacterEngine,
    spec: &ConnectionSetSpec,
    zeta: &Partition,
) -> Result<BigRational, Error> {
    if zeta.n() != spec.n() {
        return Err(Error::InvalidInput(format!(
            "shape {zeta} does not label a representation of S_{}",
            spec.n()
        )));
    }
    let mut numerator = BigInt::zero();
    for gamma in spec.classes() {
        numerator += BigInt::from(class_size(spec.n(), gamma)?) * engine.character(zeta, gamma)?;
    }
    Ok(Ratio::new(numerator, BigInt::from(engine.dimension(zeta))))
}

/// The full exact spectrum of `Cay(S_n, S)`.
///
/// Eigenvalues are computed per shape (in parallel when a rayon pool with
/// several workers is ambient) and merged deterministically: shapes are
/// visited in canonical order, so achiever lists and the resulting lines
/// do not depend on the worker count.
pub fn spectrum(engine: &CharacterEngine, spec: &ConnectionSetSpec) -> Result<Spectrum, Error> {
    let shapes = enumerate_partitions(spec.n())?;
    let values: Vec<BigRational> = shapes
        .par_iter()
        .map(|zeta| eigenvalue(engine, spec, zeta))
        .collect::<Result<_, _>>()?;
    let mut grouped: BTreeMap<BigRational, (BigUint, Vec<Partition>)> = BTreeMap::new();
    for (zeta, value) in shapes.into_iter().zip(values) {
        let dim = engine.dimension(&zeta);
        let entry = grouped
            .entry(value)
            .or_insert_with(|| (BigUint::zero(), Vec::new()));
        entry.0 += dim.pow(2);
        entry.1.push(zeta);
    }
    let lines: Vec<SpectrumLine> = grouped
        .into_iter()
        .rev()
        .map(|(value, (multiplicity, achievers))| SpectrumLine {
            value,
            multiplicity,
            achievers,
        })
        .collect();
    let result = Spectrum {
        n: spec.n(),
        degree: spec.set_size(),
        index_t: spec.generated_index()?,
        lines,
    };
    debug_assert!(result.validate().is_ok());
    Ok(result)
}

/// The strictly second largest eigenvalue and its achieving shapes.
pub fn strictly_second_largest(
    engine: &CharacterEngine,
    spec: &ConnectionSetSpec,
) -> Result<(BigRational, Vec<Partition>), Error> {
    let spectrum = spectrum(engine, spec)?;
    let line = spectrum.strictly_second()?;
    Ok((line.value.clone(), line.achievers.clone()))
}

// ============================================================================
// Aldous property
// ============================================================================

/// Result of the Aldous-property check for one connection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AldousReport {
    /// Whether the standard shape `(n-1,1)` attains the strictly second
    /// largest eigenvalue.
    pub holds: bool,
    /// The strictly second largest eigenvalue.
    pub strictly_second: BigRational,
    /// All shapes attaining it.
    pub achievers: Vec<Partition>,
    /// The standard shape's own eigenvalue.
    pub standard_value: BigRational,
    /// Index of the generated subgroup.
    pub index_t: u64,
}

/// Checks the Aldous property for `Cay(S_n, S)`: is the strictly second
/// largest eigenvalue attained by the standard shape `(n-1,1)`?
/// Requires `n >= 3`.
pub fn aldous_check(
    engine: &CharacterEngine,
    spec: &ConnectionSetSpec,
) -> Result<AldousReport, Error> {
    if spec.n() < 3 {
        return Err(Error::InvalidInput(format!(
            "the Aldous check needs n >= 3, got {}",
            spec.n()
        )));
    }
    let standard = Partition::new(vec![spec.n() - 1, 1]).expect("valid for n >= 3");
    let full = spectrum(engine, spec)?;
    let line = full.strictly_second()?;
    Ok(AldousReport {
        holds: line.achievers.contains(&standard),
        strictly_second: line.value.clone(),
        achievers: line.achievers.clone(),
        standard_value: eigenvalue(engine, spec, &standard)?,
        index_t: full.index_t,
    })
}

// ============================================================================
// Closed forms for T(n, I)
// ============================================================================

fn check_support_set(n: usize, support: &BTreeSet<usize>) -> Result<(), Error> {
    if support.is_empty() {
        return Err(Error::InvalidInput("empty support set".into()));
    }
    if let Some(&t) = support.iter().find(|&&t| t < 2 || t > n) {
        return Err(Error::InvalidInput(format!(
            "support size {t} out of range 2..={n}"
        )));
    }
    Ok(())
}

/// Standard-shape eigenvalue of `T(n, I)` in closed form:
/// `sum_{t in I} C(n,t) D(t) (n - t - 1) / (n - 1)`.
pub fn standard_eigenvalue_closed_form(
    n: usize,
    support: &BTreeSet<usize>,
) -> Result<BigRational, Error> {
    if n < 2 {
        return Err(Error::InvalidInput("need n >= 2".into()));
    }
    check_support_set(n, support)?;
    let mut numerator = BigInt::zero();
    for &t in support {
        let count = BigInt::from(binomial(n, t) * derangement_count(t));
        numerator += count * BigInt::from(n as i64 - t as i64 - 1);
    }
    Ok(Ratio::new(numerator, BigInt::from(n as i64 - 1)))
}

/// Sign-shape eigenvalue of `T(n, I)` in closed form:
/// `sum_{t in I} (-1)^(t-1) (t - 1) C(n, t)` (always an integer).
pub fn sign_eigenvalue_closed_form(n: usize, support: &BTreeSet<usize>) -> Result<BigInt, Error> {
    if n < 2 {
        return Err(Error::InvalidInput("need n >= 2".into()));
    }
    check_support_set(n, support)?;
    let mut total = BigInt::zero();
    for &t in support {
        total += BigInt::from(binomial(n, t)) * even_odd_derangement_gap(t);
    }
    Ok(total)
}

/// Gap `A(t) - B(t)` between the standard and sign contributions of the
/// support level `t`, where `A(t) = C(n,t) D(t) (n-t-1)/(n-1)` and
/// `B(t) = (-1)^(t-1) (t-1) C(n,t)`. Requires `2 <= t <= n - 2`.
pub fn ab_gap(n: usize, t: usize) -> Result<BigRational, Error> {
    if !(2..=n.saturating_sub(2)).contains(&t) {
        return Err(Error::InvalidInput(format!(
            "level t = {t} out of range 2..={} for n = {n}",
            n.saturating_sub(2)
        )));
    }
    let a = Ratio::new(
        BigInt::from(binomial(n, t) * derangement_count(t)) * BigInt::from(n as i64 - t as i64 - 1),
        BigInt::from(n as i64 - 1),
    );
    let b = Ratio::from_integer(BigInt::from(binomial(n, t)) * even_odd_derangement_gap(t));
    Ok(a - b)
}

/// The quadratic lower-bound witness for the gap at levels
/// `5 <= t <= n - 2`: `f(t) = -2t^2 + 2nt - 2t - n + 1`. Its minimum over
/// that window is `f(n-2) = n - 3`.
pub fn ab_gap_quadratic(n: i64, t: i64) -> i64 {
    -2 * t * t + 2 * n * t - 2 * t - n + 1
}

// ============================================================================
// Derangement graph
// ============================================================================

/// Smallest eigenvalue of the derangement graph `Cay(S_n, D_n)` with its
/// achieving shapes. Requires `n >= 4` (below that the derangement graph
/// is a union of edges or triangles and the known closed form does not
/// apply).
pub fn derangement_min_eigenvalue(
    engine: &CharacterEngine,
    n: usize,
) -> Result<(BigRational, Vec<Partition>), Error> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "derangement minimum needs n >= 4, got {n}"
        )));
    }
    let spec = ConnectionSetSpec::build(n, Selector::Derangements)?;
    let full = spectrum(engine, &spec)?;
    let line = full.min_line();
    Ok((line.value.clone(), line.achievers.clone()))
}

// ============================================================================
// Scans over single classes
// ============================================================================

/// One row of the single-class Aldous scan.
#[derive(Clone, Debug)]
pub struct Theorem1Row {
    /// The class scanned.
    pub gamma: Partition,
    /// Its fixed-point count `c_1`.
    pub c1: usize,
    /// Whether the Aldous property holds for `Cay(S_n, C(gamma))`.
    pub holds: bool,
    /// Whether this row carries an asserted expectation.
    pub asserted: bool,
    /// The expected outcome for asserted rows (`None` on report-only rows).
    pub expected_holds: Option<bool>,
}

/// Outcome of [`scan_theorem1`].
#[derive(Clone, Debug)]
pub struct Theorem1Scan {
    pub n: usize,
    pub rows: Vec<Theorem1Row>,
    /// Classes whose asserted expectation failed (must stay empty).
    pub violations: Vec<Partition>,
}

/// Scans every single-class connection set of `S_n` for the Aldous
/// property. Rows with `c_1 <= 1` are asserted to fail for `n >= 6`: a
/// class with at most one fixed point pushes the standard eigenvalue to
/// 0 or below while some other shape stays strictly closer to the degree.
/// Rows with `c_1 >= 2` are report-only. Requires `n >= 4`.
pub fn scan_theorem1(engine: &CharacterEngine, n: usize) -> Result<Theorem1Scan, Error> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "single-class scan needs n >= 4, got {n}"
        )));
    }
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for gamma in enumerate_partitions(n)? {
        if gamma.is_identity_class() {
            continue;
        }
        let spec = ConnectionSetSpec::build(n, Selector::Single(gamma.clone()))?;
        let report = aldous_check(engine, &spec)?;
        let c1 = gamma.count_of(1);
        let asserted = n >= 6 && c1 <= 1;
        let expected_holds = asserted.then_some(false);
        if let Some(expected) = expected_holds {
            if report.holds != expected {
                violations.push(gamma.clone());
            }
        }
        rows.push(Theorem1Row {
            gamma,
            c1,
            holds: report.holds,
            asserted,
            expected_holds,
        });
    }
    Ok(Theorem1Scan {
        n,
        rows,
        violations,
    })
}

/// One row of the normalized-character maximum scan.
#[derive(Clone, Debug)]
pub struct Lemma22Row {
    /// The class scanned (`c_1 >= 2`).
    pub gamma: Partition,
    /// Its fixed-point count.
    pub c1: usize,
    /// `max_zeta chi_zeta(gamma)/dim(zeta)` over shapes other than `(n)`
    /// and `(1^n)`.
    pub max_value: BigRational,
    /// Whether the standard shape attains the maximum.
    pub standard_attained: bool,
    /// All shapes attaining the maximum, in canonical order.
    pub achievers: Vec<Partition>,
}

/// Outcome of [`scan_lemma22`].
#[derive(Clone, Debug)]
pub struct Lemma22Scan {
    pub n: usize,
    pub rows: Vec<Lemma22Row>,
    /// Classes where the standard shape misses the maximum. Report-only:
    /// nothing is asserted about this list at any `n`.
    pub exceptions: Vec<Partition>,
}

/// For every class with at least two fixed points, finds the maximum
/// normalized character over all shapes except the trivial and sign
/// shapes, and reports whether the standard shape attains it. Report-only;
/// requires `n >= 4`.
pub fn scan_lemma22(engine: &CharacterEngine, n: usize) -> Result<Lemma22Scan, Error> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "normalized-character scan needs n >= 4, got {n}"
        )));
    }
    let trivial = Partition::new(vec![n])?;
    let sign = Partition::new(vec![1; n])?;
    let standard = Partition::new(vec![n - 1, 1])?;
    let shapes: Vec<Partition> = enumerate_partitions(n)?
        .into_iter()
        .filter(|zeta| *zeta != trivial && *zeta != sign)
        .collect();
    let classes: Vec<Partition> = enumerate_partitions(n)?
        .into_iter()
        .filter(|gamma| gamma.count_of(1) >= 2)
        .collect();
    let rows: Vec<Lemma22Row> = classes
        .par_iter()
        .map(|gamma| -> Result<Lemma22Row, Error> {
            let mut max_value: Option<BigRational> = None;
            let mut achievers = Vec::new();
            for zeta in &shapes {
                let value = engine.normalized_character(zeta, gamma)?;
                match &max_value {
                    Some(current) if value < *current => {}
                    Some(current) if value == *current => achievers.push(zeta.clone()),
                    _ => {
                        max_value = Some(value);
                        achievers = vec![zeta.clone()];
                    }
                }
            }
            let max_value = max_value.expect("at least one shape for n >= 4");
            Ok(Lemma22Row {
                gamma: gamma.clone(),
                c1: gamma.count_of(1),
                standard_attained: achievers.contains(&standard),
                max_value,
                achievers,
            })
        })
        .collect::<Result<_, _>>()?;
    let exceptions = rows
        .iter()
        .filter(|row| !row.standard_attained)
        .map(|row| row.gamma.clone())
        .collect();
    Ok(Lemma22Scan {
        n,
        rows,
        exceptions,
    })
}

// ============================================================================
// Tests
// ============================================================================
