//! Exact irreducible characters of the symmetric group.
//!
//! The engine computes integer character values `chi_zeta(gamma)` with the
//! Murnaghan-Nakayama border-strip recursion, dimensions with the hook
//! length formula, and normalized characters `chi_zeta(gamma) / dim(zeta)`
//! as exact rationals. Closed forms for the six small-depth shape families
//! used by the eigenvalue closed forms live here too, as do the
//! dimension-bound scan and a plain-text cache format for character values.
//!
//! Border strips are manipulated through beta-numbers (first-column hook
//! lengths): with `m` rows, `beta_i = lambda_i + (m - 1 - i)` gives a
//! strictly decreasing sequence, removing a border strip of length `L`
//! means moving one `beta_i` down to the vacant value `beta_i - L`, and the
//! strip's leg parity is the number of occupied beta-values jumped over.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};
use std::str::FromStr;
use std::sync::Mutex;

use num::bigint::{BigInt, BigUint, Sign};
use num::rational::Ratio;
use num::{BigRational, One, ToPrimitive, Zero};

use crate::error::Error;
use crate::partitions::{conjugate_parts, enumerate_partitions, factorial, Partition};

// ============================================================================
// Engine
// ============================================================================

/// Memoizing character engine.
///
/// Finished values are shared across calls (and across threads) through
/// mutex-guarded maps; the recursion itself works on a call-local memo, so
/// no lock is held while computing. Concurrent misses on the same key may
/// recompute the same value, which is benign: character values are
/// deterministic.
#[derive(Default)]
pub struct CharacterEngine {
    values: Mutex<HashMap<(Partition, Partition), BigInt>>,
    dims: Mutex<HashMap<Partition, BigUint>>,
}

impl CharacterEngine {
    /// A fresh engine with empty caches.
    pub fn new() -> Self {
        CharacterEngine::default()
    }

    /// The exact character value `chi_zeta(gamma)`.
    ///
    /// `zeta` (a shape) and `gamma` (a cycle type) must be partitions of the
    /// same `n`.
    pub fn character(&self, zeta: &Partition, gamma: &Partition) -> Result<BigInt, Error> {
        if zeta.n() != gamma.n() {
            return Err(Error::InvalidInput(format!(
                "shape {zeta} and cycle type {gamma} partition different integers"
            )));
        }
        let key = (zeta.clone(), gamma.clone());
        if let Some(v) = self.values.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let mut memo = HashMap::new();
        let value = murnaghan_nakayama(zeta.parts(), gamma.parts(), &mut memo);
        self.values.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// The dimension `dim(zeta) = chi_zeta(identity)`, via the hook length
    /// formula `n! / prod hooks`.
    pub fn dimension(&self, zeta: &Partition) -> BigUint {
        if let Some(d) = self.dims.lock().unwrap().get(zeta) {
            return d.clone();
        }
        let dim = factorial(zeta.n()) / hook_product(zeta.parts());
        self.dims.lock().unwrap().insert(zeta.clone(), dim.clone());
        dim
    }

    /// The normalized character `chi_zeta(gamma) / dim(zeta)` as an exact
    /// reduced rational.
    pub fn normalized_character(
        &self,
        zeta: &Partition,
        gamma: &Partition,
    ) -> Result<BigRational, Error> {
        let chi = self.character(zeta, gamma)?;
        let dim = BigInt::from(self.dimension(zeta));
        Ok(Ratio::new(chi, dim))
    }

    /// Diagnostic report: the exponent `e` with `|chi_zeta(gamma)| =
    /// dim(zeta)^e`, i.e. `ln|chi| / ln(dim)`, as a float. Returns
    /// `Ok(None)` when the exponent is not defined: `dim(zeta) < 2` or
    /// `chi_zeta(gamma) = 0`.
    pub fn character_ratio_exponent(
        &self,
        zeta: &Partition,
        gamma: &Partition,
    ) -> Result<Option<f64>, Error> {
        let chi = self.character(zeta, gamma)?;
        let dim = self.dimension(zeta);
        if dim < BigUint::from(2u32) || chi.is_zero() {
            return Ok(None);
        }
        let ln_chi = ln_big(chi.magnitude());
        let ln_dim = ln_big(&dim);
        Ok(Some(ln_chi / ln_dim))
    }

    /// Preloads finished character values (typically from a cache file).
    pub fn preload(&self, entries: Vec<(Partition, Partition, BigInt)>) {
        let mut values = self.values.lock().unwrap();
        for (zeta, gamma, value) in entries {
            values.insert((zeta, gamma), value);
        }
    }

    /// All finished character values, sorted canonically (shape, then cycle
    /// type, both in descending lexicographic order) for deterministic
    /// serialization.
    pub fn snapshot(&self) -> Vec<(Partition, Partition, BigInt)> {
        let mut entries: Vec<_> = self
            .values
            .lock()
            .unwrap()
            .iter()
            .map(|((z, g), v)| (z.clone(), g.clone(), v.clone()))
            .collect();
        entries.sort_unstable_by(|a, b| (&b.0, &b.1).cmp(&(&a.0, &a.1)));
        entries
    }
}

/// Natural log of a positive big integer, via the float mantissa plus the
/// bit count (stays accurate far beyond `f64` range).
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().expect("small BigUint fits f64").ln();
    }
    let shift = bits - 52;
    let mantissa = (x >> shift).to_f64().expect("52-bit mantissa fits f64");
    mantissa.ln() + (shift as f64) * std::f64::consts::LN_2
}

// ============================================================================
// Murnaghan-Nakayama recursion
// ============================================================================

fn murnaghan_nakayama(
    shape: &[usize],
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
) -> BigInt {
    if cycles.is_empty() {
        debug_assert!(shape.is_empty());
        return BigInt::one();
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (rest, odd_leg) in border_strip_removals(shape, cycles[0]) {
        let sub = murnaghan_nakayama(&rest, &cycles[1..], memo);
        if odd_leg {
            total -= sub;
        } else {
            total += sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// All ways to remove a border strip of length `strip` from `shape`.
/// Returns the remaining shape and whether the strip's leg length is odd
/// (i.e. whether the term enters with a minus sign).
fn border_strip_removals(shape: &[usize], strip: usize) -> Vec<(Vec<usize>, bool)> {
    let m = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i))
        .collect();
    let mut removals = Vec::new();
    for i in 0..m {
        if beta[i] < strip {
            continue;
        }
        let target = beta[i] - strip;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(row, &b)| b - (m - 1 - row))
            .take_while(|&p| p > 0)
            .collect();
        removals.push((parts, jumped % 2 == 1));
    }
    removals
}

/// Product of all hook lengths of the diagram of `parts`.
fn hook_product(parts: &[usize]) -> BigUint {
    let conj = conjugate_parts(parts);
    let mut product = BigUint::one();
    for (i, &row) in parts.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            let hook = (row - j) + (col - i) - 1;
            product *= BigUint::from(hook);
        }
    }
    product
}

// ============================================================================
// Closed forms for small-depth shapes
// ============================================================================

/// The six shape families whose characters are polynomials in the cycle
/// counts `c_1, c_2, c_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    /// `(n)`: the trivial character, constant 1.
    Trivial,
    /// `(n-1,1)`: `c_1 - 1`.
    Standard,
    /// `(n-2,2)`: `c_1(c_1-3)/2 + c_2`.
    TwoRowTwo,
    /// `(n-2,1,1)`: `(c_1-1)(c_1-2)/2 - c_2`.
    HookTwoOnes,
    /// `(n-3,3)`: `c_1(c_1-1)(c_1-5)/6 + (c_1-1)c_2 + c_3`.
    TwoRowThree,
    /// `(n-3,2,1)`: `c_1(c_1-2)(c_1-4)/3 - c_3`.
    DepthThreeMixed,
}

impl TableFamily {
    /// All six families.
    pub fn all() -> [TableFamily; 6] {
        [
            TableFamily::Trivial,
            TableFamily::Standard,
            TableFamily::TwoRowTwo,
            TableFamily::HookTwoOnes,
            TableFamily::TwoRowThree,
            TableFamily::DepthThreeMixed,
        ]
    }

    /// Smallest `n` for which the family's shape is a valid partition
    /// (weakly decreasing with positive parts).
    pub fn min_n(self) -> usize {
        match self {
            TableFamily::Trivial => 1,
            TableFamily::Standard => 2,
            TableFamily::TwoRowTwo => 4,
            TableFamily::HookTwoOnes => 3,
            TableFamily::TwoRowThree => 6,
            TableFamily::DepthThreeMixed => 5,
        }
    }

    /// The family's shape at a given `n`.
    pub fn shape(self, n: usize) -> Result<Partition, Error> {
        if n < self.min_n() {
            return Err(Error::InvalidInput(format!(
                "family {self:?} needs n >= {}, got {n}",
                self.min_n()
            )));
        }
        let parts = match self {
            TableFamily::Trivial => vec![n],
            TableFamily::Standard => vec![n - 1, 1],
            TableFamily::TwoRowTwo => vec![n - 2, 2],
            TableFamily::HookTwoOnes => vec![n - 2, 1, 1],
            TableFamily::TwoRowThree => vec![n - 3, 3],
            TableFamily::DepthThreeMixed => vec![n - 3, 2, 1],
        };
        Partition::new(parts)
    }
}

/// Character of a [`TableFamily`] shape on the class `gamma`, evaluated via
/// the closed-form polynomial in `c_1, c_2, c_3` (no recursion).
///
/// Errors when `gamma.n()` is below the family's validity threshold.
pub fn closed_form_character(family: TableFamily, gamma: &Partition) -> Result<BigInt, Error> {
    let n = gamma.n();
    family.shape(n)?; // range check
    let c1 = gamma.count_of(1) as i128;
    let c2 = gamma.count_of(2) as i128;
    let c3 = gamma.count_of(3) as i128;
    let value = match family {
        TableFamily::Trivial => 1,
        TableFamily::Standard => c1 - 1,
        TableFamily::TwoRowTwo => c1 * (c1 - 3) / 2 + c2,
        TableFamily::HookTwoOnes => (c1 - 1) * (c1 - 2) / 2 - c2,
        TableFamily::TwoRowThree => c1 * (c1 - 1) * (c1 - 5) / 6 + (c1 - 1) * c2 + c3,
        TableFamily::DepthThreeMixed => c1 * (c1 - 2) * (c1 - 4) / 3 - c3,
    };
    Ok(BigInt::from(value))
}

// ============================================================================
// Dimension bound scan
// ============================================================================

/// Checks the dimension bound `dim(zeta) >= n^2.05` for every shape of `n`
/// with at least three boxes outside the first row and at least three
/// outside the first column. The comparison is exact:
/// `dim^20 >= n^41` in big integers. Returns the violating shapes (expected
/// empty on the supported window `13 <= n <= 16`).
pub fn check_lemma25(engine: &CharacterEngine, n: usize) -> Result<Vec<Partition>, Error> {
    if !(13..=16).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "dimension bound scan supports 13 <= n <= 16, got {n}"
        )));
    }
    let threshold = BigUint::from(n).pow(41);
    let mut violations = Vec::new();
    for zeta in enumerate_partitions(n)? {
        let outside_first_row = n - zeta.parts()[0];
        let outside_first_col = n - zeta.num_parts();
        if outside_first_row < 3 || outside_first_col < 3 {
            continue;
        }
        if engine.dimension(&zeta).pow(20) < threshold {
            violations.push(zeta);
        }
    }
    Ok(violations)
}

// ============================================================================
// Character cache files
// ============================================================================

const CACHE_VERSION: &str = "snchar v1";

/// Writes character values in the plain-text cache format: a header line
/// `snchar v1 n=<n>`, then one `zeta;gamma;value` line per entry. Entries
/// should already be sorted (see [`CharacterEngine::snapshot`]).
pub fn write_cache<W: Write>(
    mut w: W,
    n: usize,
    entries: &[(Partition, Partition, BigInt)],
) -> io::Result<()> {
    writeln!(w, "{CACHE_VERSION} n={n}")?;
    for (zeta, gamma, value) in entries {
        writeln!(w, "{zeta};{gamma};{value}")?;
    }
    Ok(())
}

/// Reads a cache file back, validating the header version and `n` and every
/// entry. Any malformed line makes the whole file unusable.
pub fn read_cache<R: BufRead>(
    r: R,
    expected_n: usize,
) -> Result<Vec<(Partition, Partition, BigInt)>, Error> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Cache("empty file".into()))?
        .map_err(Error::Io)?;
    let expected_header = format!("{CACHE_VERSION} n={expected_n}");
    if header != expected_header {
        return Err(Error::Cache(format!(
            "header {header:?} does not match expected {expected_header:?}"
        )));
    }
    let mut entries = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line.map_err(Error::Io)?;
        if line.is_empty() {
            continue;
        }
        let mut fields = line.splitn(3, ';');
        let (zeta, gamma, value) = match (fields.next(), fields.next(), fields.next()) {
            (Some(z), Some(g), Some(v)) => (z, g, v),
            _ => {
                return Err(Error::Cache(format!("line {}: expected 3 fields", idx + 2)));
            }
        };
        let zeta = Partition::from_str(zeta)
            .map_err(|e| Error::Cache(format!("line {}: {e}", idx + 2)))?;
        let gamma = Partition::from_str(gamma)
            .map_err(|e| Error::Cache(format!("line {}: {e}", idx + 2)))?;
        let value = BigInt::parse_bytes(value.as_bytes(), 10)
            .ok_or_else(|| Error::Cache(format!("line {}: bad integer {value:?}", idx + 2)))?;
        if zeta.n() != expected_n || gamma.n() != expected_n {
            return Err(Error::Cache(format!("line {}: entry for wrong n", idx + 2)));
        }
        entries.push((zeta, gamma, value));
    }
    Ok(entries)
}

/// Sign of a big integer as -1/0/+1, handy for sign-pattern tests.
pub fn bigint_signum(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::class_size;
    use num::Signed;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn character_known_values() {
        let eng = CharacterEngine::new();
        // Standard shape of S_6 on one transposition: c_1 - 1 = 3.
        assert_eq!(eng.character(&p("5,1"), &p("2,1,1,1,1")).unwrap(), big(3));
        // Self-conjugate shape of S_4 on the double-transposition class.
        assert_eq!(eng.character(&p("2,2"), &p("2,2")).unwrap(), big(2));
        // A zero of the same shape.
        assert_eq!(eng.character(&p("2,2"), &p("2,1,1")).unwrap(), big(0));
    }

    #[test]
    fn trivial_and_sign_rows() {
        let eng = CharacterEngine::new();
        for n in [3, 5, 6] {
            for gamma in enumerate_partitions(n).unwrap() {
                let trivial = Partition::new(vec![n]).unwrap();
                let sign = Partition::new(vec![1; n]).unwrap();
                assert_eq!(eng.character(&trivial, &gamma).unwrap(), big(1));
                assert_eq!(
                    eng.character(&sign, &gamma).unwrap(),
                    big(gamma.sign() as i64)
                );
            }
        }
    }

    #[test]
    fn character_rejects_mismatched_n() {
        let eng = CharacterEngine::new();
        assert!(eng.character(&p("3,1"), &p("2,2,1")).is_err());
    }

    #[test]
    fn dimensions_by_hooks() {
        let eng = CharacterEngine::new();
        assert_eq!(eng.dimension(&p("1,1,1,1")), BigUint::one());
        assert_eq!(eng.dimension(&p("2,2")), BigUint::from(2u32));
        assert_eq!(eng.dimension(&p("4,2,1")), BigUint::from(35u32));
        for n in 2..=10 {
            let standard = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(eng.dimension(&standard), BigUint::from(n - 1));
        }
    }

    #[test]
    fn dimension_matches_character_at_identity() {
        let eng = CharacterEngine::new();
        for n in 1..=8 {
            let identity = Partition::new(vec![1; n]).unwrap();
            for zeta in enumerate_partitions(n).unwrap() {
                assert_eq!(
                    BigInt::from(eng.dimension(&zeta)),
                    eng.character(&zeta, &identity).unwrap(),
                    "zeta = {zeta}"
                );
            }
        }
    }

    #[test]
    fn dimension_squares_sum_to_group_order() {
        let eng = CharacterEngine::new();
        for n in 1..=12 {
            let total: BigUint = enumerate_partitions(n)
                .unwrap()
                .iter()
                .map(|zeta| eng.dimension(zeta).pow(2))
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    /// First orthogonality: sum over classes of |C| chi(g)^2 = n! for each
    /// row, and 0 for distinct rows. This exercises every character value
    /// and catches sign or strip-removal bugs immediately.
    #[test]
    fn row_orthogonality_small_n() {
        let eng = CharacterEngine::new();
        for n in 1..=7 {
            let shapes = enumerate_partitions(n).unwrap();
            let classes = shapes.clone();
            for (i, a) in shapes.iter().enumerate() {
                for b in shapes.iter().skip(i) {
                    let total: BigInt = classes
                        .iter()
                        .map(|gamma| {
                            BigInt::from(class_size(n, gamma).unwrap())
                                * eng.character(a, gamma).unwrap()
                                * eng.character(b, gamma).unwrap()
                        })
                        .sum();
                    let expected = if a == b {
                        BigInt::from(factorial(n))
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(total, expected, "rows {a} and {b}");
                }
            }
        }
    }

    /// Conjugating the shape multiplies the character by the class sign.
    #[test]
    fn conjugate_shape_twists_by_sign() {
        let eng = CharacterEngine::new();
        for n in 1..=7 {
            for zeta in enumerate_partitions(n).unwrap() {
                for gamma in enumerate_partitions(n).unwrap() {
                    let twisted = eng.character(&zeta.conjugate(), &gamma).unwrap();
                    let plain = eng.character(&zeta, &gamma).unwrap();
                    assert_eq!(twisted, plain * big(gamma.sign() as i64));
                }
            }
        }
    }

    #[test]
    fn normalized_character_values() {
        let eng = CharacterEngine::new();
        // Standard shape on a fixed-point-free class: -1/(n-1).
        let nc = eng.normalized_character(&p("5,1"), &p("6")).unwrap();
        assert_eq!(nc, Ratio::new(big(-1), big(5)));
        let nc = eng.normalized_character(&p("5,1"), &p("4,2")).unwrap();
        assert_eq!(nc, Ratio::new(big(-1), big(5)));
        // Conjugate of (4,2) on the (4,2) class in S_6: 1/9.
        let nc = eng.normalized_character(&p("2,2,1,1"), &p("4,2")).unwrap();
        assert_eq!(nc, Ratio::new(big(1), big(9)));
        // Trivial shape is constantly 1.
        let nc = eng.normalized_character(&p("6"), &p("3,2,1")).unwrap();
        assert_eq!(nc, Ratio::from_integer(big(1)));
    }

    #[test]
    fn normalized_character_is_bounded_by_one() {
        let eng = CharacterEngine::new();
        for n in 1..=7 {
            for zeta in enumerate_partitions(n).unwrap() {
                for gamma in enumerate_partitions(n).unwrap() {
                    let nc = eng.normalized_character(&zeta, &gamma).unwrap();
                    assert!(nc.abs() <= Ratio::from_integer(big(1)));
                }
            }
        }
    }

    #[test]
    fn ratio_exponent_reports() {
        let eng = CharacterEngine::new();
        // At the identity |chi| = dim, so the exponent is exactly 1.
        let identity = p("1,1,1,1,1,1");
        let e = eng
            .character_ratio_exponent(&p("4,2"), &identity)
            .unwrap()
            .unwrap();
        assert!((e - 1.0).abs() < 1e-12);
        // chi = 3, dim = 5 gives ln 3 / ln 5.
        let e = eng
            .character_ratio_exponent(&p("5,1"), &p("2,1,1,1,1"))
            .unwrap()
            .unwrap();
        assert!((e - 3f64.ln() / 5f64.ln()).abs() < 1e-12);
        // Not applicable: dimension 1.
        assert_eq!(
            eng.character_ratio_exponent(&p("6"), &p("3,2,1")).unwrap(),
            None
        );
        // Not applicable: zero character value.
        assert_eq!(
            eng.character_ratio_exponent(&p("2,2"), &p("2,1,1"))
                .unwrap(),
            None
        );
    }

    #[test]
    fn ln_big_matches_f64_for_huge_inputs() {
        let x = BigUint::from(7u32).pow(200);
        let want = 200.0 * 7f64.ln();
        assert!((ln_big(&x) - want).abs() < 1e-9 * want);
    }

    #[test]
    fn closed_forms_match_recursion_up_to_ten() {
        let eng = CharacterEngine::new();
        for family in TableFamily::all() {
            for n in family.min_n()..=10 {
                let shape = family.shape(n).unwrap();
                for gamma in enumerate_partitions(n).unwrap() {
                    assert_eq!(
                        closed_form_character(family, &gamma).unwrap(),
                        eng.character(&shape, &gamma).unwrap(),
                        "family {family:?}, n = {n}, gamma = {gamma}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_spot_values() {
        // (n-2,2) at n = 4 on the class (2,2): c_1 = 0, c_2 = 2 gives 2.
        assert_eq!(
            closed_form_character(TableFamily::TwoRowTwo, &p("2,2")).unwrap(),
            big(2)
        );
        // (n-2,1,1) on a fixed-point-free, 2-free class: (0-1)(0-2)/2 = 1.
        assert_eq!(
            closed_form_character(TableFamily::HookTwoOnes, &p("6")).unwrap(),
            big(1)
        );
        // (n-3,3) at the identity: n(n-1)(n-5)/6.
        assert_eq!(
            closed_form_character(TableFamily::TwoRowThree, &p("1^6")).unwrap(),
            big(5)
        );
        assert_eq!(
            closed_form_character(TableFamily::TwoRowThree, &p("1^7")).unwrap(),
            big(14)
        );
    }

    #[test]
    fn closed_form_rejects_small_n() {
        assert!(closed_form_character(TableFamily::TwoRowThree, &p("3,2")).is_err());
        assert!(closed_form_character(TableFamily::TwoRowTwo, &p("2,1")).is_err());
        assert!(TableFamily::DepthThreeMixed.shape(4).is_err());
        assert_eq!(TableFamily::DepthThreeMixed.shape(5).unwrap(), p("2,2,1"));
    }

    #[test]
    fn dimension_bound_scan_window() {
        assert!(check_lemma25(&CharacterEngine::new(), 12).is_err());
        assert!(check_lemma25(&CharacterEngine::new(), 17).is_err());
    }

    #[test]
    fn dimension_bound_scan_excludes_shallow_shapes() {
        let eng = CharacterEngine::new();
        // (12,1) has dimension 12, far below 13^2.05; the scan must not
        // flag it because only one box lies outside the first row.
        let shallow = p("12,1");
        assert!(eng.dimension(&shallow).pow(20) < BigUint::from(13u32).pow(41));
        assert_eq!(check_lemma25(&eng, 13).unwrap(), Vec::<Partition>::new());
    }

    #[test]
    fn cache_round_trips() {
        let eng = CharacterEngine::new();
        for zeta in enumerate_partitions(5).unwrap() {
            for gamma in enumerate_partitions(5).unwrap() {
                eng.character(&zeta, &gamma).unwrap();
            }
        }
        let entries = eng.snapshot();
        let mut buf = Vec::new();
        write_cache(&mut buf, 5, &entries).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("snchar v1 n=5\n"));
        let reloaded = read_cache(io::Cursor::new(&buf), 5).unwrap();
        assert_eq!(reloaded, entries);

        // Preloading a fresh engine reproduces the same snapshot without
        // recomputation.
        let eng2 = CharacterEngine::new();
        eng2.preload(reloaded);
        assert_eq!(eng2.snapshot(), entries);
    }

    #[test]
    fn cache_rejects_bad_headers_and_entries() {
        let good = b"snchar v1 n=5\n5;5;1\n".to_vec();
        assert!(read_cache(io::Cursor::new(&good), 5).is_ok());
        // Wrong n in the header.
        assert!(read_cache(io::Cursor::new(&good), 6).is_err());
        // Wrong version.
        let bad = b"snchar v2 n=5\n".to_vec();
        assert!(read_cache(io::Cursor::new(&bad), 5).is_err());
        // Entry for a different n than the header promises.
        let bad = b"snchar v1 n=5\n4;4;1\n".to_vec();
        assert!(read_cache(io::Cursor::new(&bad), 5).is_err());
        // Malformed value field.
        let bad = b"snchar v1 n=5\n5;5;x\n".to_vec();
        assert!(read_cache(io::Cursor::new(&bad), 5).is_err());
    }
}
