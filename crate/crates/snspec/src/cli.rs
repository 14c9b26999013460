//! Command-line interface.
//!
//! Eight subcommands cover the crate's surface: `spectrum`, `aldous` and
//! `verify` work on one connection set (`--set <selector>`), the rest scan
//! or tabulate over a whole degree `n`. Results are emitted as a single
//! JSON document (default) or CSV on stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 on success, 1 when a verification or an asserted scan
//! reports violations (or a computation fails), 2 on invalid input
//! (malformed selectors, out-of-range `n`, usage errors).
//!
//! Output documents are byte-identical for a given request regardless of
//! `--threads`: parallelism only splits per-shape work, and results are
//! merged in canonical order.

use std::collections::BTreeSet;
use std::fs;
use std::io::BufReader;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, One, ToPrimitive};
use serde::Serialize;

use crate::characters::{check_lemma25, read_cache, write_cache, CharacterEngine};
use crate::connection_sets::{ConnectionSetSpec, Selector};
use crate::error::Error;
use crate::oracle;
use crate::partitions::{derangement_count, Partition};
use crate::spectra;

// ============================================================================
// Argument parsing
// ============================================================================

/// Exact spectra of normal Cayley graphs on the symmetric group.
#[derive(Parser, Debug)]
#[command(name = "snspec", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Exact spectrum of Cay(S_n, S) for one connection set
    Spectrum(SetArgs),
    /// Aldous-property check for one connection set
    Aldous(SetArgs),
    /// Compare the exact spectrum against the brute-force oracle (n <= 7)
    Verify(VerifyArgs),
    /// Aldous scan over every single-class connection set of S_n
    #[command(name = "scan-theorem1")]
    ScanTheorem1(PlainArgs),
    /// Max normalized character per class with >= 2 fixed points (report-only)
    #[command(name = "scan-lemma22")]
    ScanLemma22(PlainArgs),
    /// Dimension bound dim(zeta) >= n^2.05 for deep shapes (13 <= n <= 16)
    #[command(name = "check-lemma25")]
    CheckLemma25(PlainArgs),
    /// Smallest eigenvalue of the derangement graph and its achievers
    #[command(name = "report-derangement")]
    ReportDerangement(PlainArgs),
    /// Table of the gaps A(t) - B(t) for t in 2..=n-2
    #[command(name = "gap-table")]
    GapTable(PlainArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Symmetric group degree n
    #[arg(long)]
    n: usize,

    /// Output format for the result document on stdout
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    /// Worker threads for per-shape computations
    #[arg(long, env = "SNSPEC_THREADS", default_value_t = 1)]
    threads: usize,

    /// Directory with per-n character cache files (snchar-<n>.txt),
    /// read on start and rewritten after the run
    #[arg(long, env = "SNSPEC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SetArgs {
    #[command(flatten)]
    common: Common,

    /// Connection-set selector: class:<partition> | TI:<t1>,<t2>,... |
    /// Tk:<k> | F:<k> | D | custom:<p1>;<p2>;...
    #[arg(long)]
    set: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,

    /// Connection-set selector (see `spectrum --help`)
    #[arg(long)]
    set: String,

    /// Override the matching tolerance (default: 1e-6 * max(1, degree))
    #[arg(long)]
    tol: Option<f64>,

    /// Also dump the numeric eigenvalues to this file as CSV (debugging)
    #[arg(long)]
    dump_numeric: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PlainArgs {
    #[command(flatten)]
    common: Common,
}

/// Output formats for result documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Pretty-printed JSON document
    Json,
    /// Flat CSV (tabular commands) or key,value rows (scalar reports)
    Csv,
}

/// Which computation to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    Aldous,
    Verify,
    ScanTheorem1,
    ScanLemma22,
    CheckLemma25,
    ReportDerangement,
    GapTable,
}

/// A fully resolved request, independent of the argument parser.
#[derive(Clone, Debug)]
pub struct CommandRequest {
    pub command: CommandKind,
    pub n: usize,
    /// Raw selector text for the per-set commands.
    pub set_selector: Option<String>,
    pub output: OutputFormat,
    pub threads: usize,
    pub cache_dir: Option<PathBuf>,
    /// `verify` only: tolerance override.
    pub tolerance: Option<f64>,
    /// `verify` only: numeric-spectrum dump path.
    pub dump_numeric: Option<PathBuf>,
}

impl Cli {
    /// Resolves the parsed arguments into a [`CommandRequest`].
    pub fn into_request(self) -> CommandRequest {
        let (command, common, set, tolerance, dump_numeric) = match self.command {
            CliCommand::Spectrum(args) => (
                CommandKind::Spectrum,
                args.common,
                Some(args.set),
                None,
                None,
            ),
            CliCommand::Aldous(args) => {
                (CommandKind::Aldous, args.common, Some(args.set), None, None)
            }
            CliCommand::Verify(args) => (
                CommandKind::Verify,
                args.common,
                Some(args.set),
                args.tol,
                args.dump_numeric,
            ),
            CliCommand::ScanTheorem1(args) => {
                (CommandKind::ScanTheorem1, args.common, None, None, None)
            }
            CliCommand::ScanLemma22(args) => {
                (CommandKind::ScanLemma22, args.common, None, None, None)
            }
            CliCommand::CheckLemma25(args) => {
                (CommandKind::CheckLemma25, args.common, None, None, None)
            }
            CliCommand::ReportDerangement(args) => (
                CommandKind::ReportDerangement,
                args.common,
                None,
                None,
                None,
            ),
            CliCommand::GapTable(args) => (CommandKind::GapTable, args.common, None, None, None),
        };
        CommandRequest {
            command,
            n: common.n,
            set_selector: set,
            output: common.output,
            threads: common.threads,
            cache_dir: common.cache_dir,
            tolerance,
            dump_numeric,
        }
    }
}

/// Parses selector text and resolves it against `n` in one step.
pub fn parse_selector(n: usize, text: &str) -> Result<ConnectionSetSpec, Error> {
    let selector: Selector = text.parse()?;
    ConnectionSetSpec::build(n, selector)
}

// ============================================================================
// Execution
// ============================================================================

/// Result of a command: the stdout document plus whether any asserted
/// check failed (exit code 1).
#[derive(Debug)]
pub struct RunOutcome {
    pub document: String,
    pub violations: bool,
}

/// Runs a request to completion inside a rayon pool of the requested size.
pub fn run(request: CommandRequest) -> Result<RunOutcome, Error> {
    if request.threads == 0 {
        return Err(Error::InvalidInput("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(request.threads)
        .build()
        .map_err(|e| Error::Internal(format!("cannot build thread pool: {e}")))?;
    pool.install(|| execute(&request))
}

fn execute(request: &CommandRequest) -> Result<RunOutcome, Error> {
    let engine = CharacterEngine::new();
    let cache_path = request
        .cache_dir
        .as_ref()
        .map(|dir| dir.join(format!("snchar-{}.txt", request.n)));
    if let Some(path) = &cache_path {
        if path.exists() {
            let loaded = fs::File::open(path)
                .map_err(Error::Io)
                .and_then(|f| read_cache(BufReader::new(f), request.n));
            match loaded {
                Ok(entries) => engine.preload(entries),
                Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
            }
        }
    }

    let selector_of = || -> Result<ConnectionSetSpec, Error> {
        let text = request
            .set_selector
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("this command needs --set".into()))?;
        parse_selector(request.n, text)
    };

    let (document, violations, touched_characters) = match request.command {
        CommandKind::Spectrum => {
            let spec = selector_of()?;
            let full = spectra::spectrum(&engine, &spec)?;
            full.validate()?;
            (render_spectrum(request.output, &spec, &full)?, false, true)
        }
        CommandKind::Aldous => {
            let spec = selector_of()?;
            let report = spectra::aldous_check(&engine, &spec)?;
            (render_aldous(request.output, &spec, &report)?, false, true)
        }
        CommandKind::Verify => {
            let spec = selector_of()?;
            let (doc, bad) = run_verify(request, &engine, &spec)?;
            (doc, bad, true)
        }
        CommandKind::ScanTheorem1 => {
            let scan = spectra::scan_theorem1(&engine, request.n)?;
            let bad = !scan.violations.is_empty();
            (render_theorem1(request.output, &scan)?, bad, true)
        }
        CommandKind::ScanLemma22 => {
            let scan = spectra::scan_lemma22(&engine, request.n)?;
            // Report-only: exceptions are data, not failures.
            (render_lemma22(request.output, &scan)?, false, true)
        }
        CommandKind::CheckLemma25 => {
            let violations = check_lemma25(&engine, request.n)?;
            let bad = !violations.is_empty();
            (
                render_lemma25(request.output, request.n, &violations)?,
                bad,
                false,
            )
        }
        CommandKind::ReportDerangement => {
            let (doc, bad) = run_derangement_report(request, &engine)?;
            (doc, bad, true)
        }
        CommandKind::GapTable => {
            let (doc, bad) = run_gap_table(request)?;
            (doc, bad, false)
        }
    };

    if touched_characters {
        if let Some(path) = &cache_path {
            if let Err(e) = persist_cache(path, request.n, &engine) {
                eprintln!("warning: cannot write cache {}: {e}", path.display());
            }
        }
    }

    Ok(RunOutcome {
        document,
        violations,
    })
}

fn persist_cache(path: &std::path::Path, n: usize, engine: &CharacterEngine) -> Result<(), Error> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut buffer = Vec::new();
    write_cache(&mut buffer, n, &engine.snapshot())?;
    fs::write(path, buffer)?;
    Ok(())
}

// ============================================================================
// Per-command drivers
// ============================================================================

fn run_verify(
    request: &CommandRequest,
    engine: &CharacterEngine,
    spec: &ConnectionSetSpec,
) -> Result<(String, bool), Error> {
    let exact = spectra::spectrum(engine, spec)?;
    let numeric = oracle::numeric_spectrum(spec)?;
    if let Some(path) = &request.dump_numeric {
        let mut out = String::from("eigenvalue\n");
        for value in &numeric {
            out.push_str(&format!("{value:.12e}\n"));
        }
        fs::write(path, out)?;
    }
    let degree = exact.degree.to_f64().unwrap_or(f64::MAX);
    let tolerance = match request.tolerance {
        Some(tol) if tol < 0.0 => {
            return Err(Error::InvalidInput("--tol must be nonnegative".into()));
        }
        Some(tol) => tol,
        None => 1e-6 * degree.max(1.0),
    };
    let report = oracle::compare_spectra(&exact, &numeric, tolerance)?;
    let components = oracle::component_count(spec)?;
    let expanded = oracle::expand_set(spec)?.len();

    let mut violations = Vec::new();
    if !report.matched {
        violations.push(format!(
            "numeric mismatch at position {} (max deviation {:.3e} > tolerance {:.3e})",
            report.first_mismatch.unwrap_or(0),
            report.max_deviation,
            report.tolerance
        ));
    }
    if components as u64 != exact.index_t {
        violations.push(format!(
            "component count {components} differs from index t = {}",
            exact.index_t
        ));
    }
    if num::BigUint::from(expanded) != exact.degree {
        violations.push(format!(
            "expanded set has {expanded} elements but class sizes sum to {}",
            exact.degree
        ));
    }
    if let Err(e) = exact.validate() {
        violations.push(format!("structural invariant failed: {e}"));
    }

    let doc = VerifyDoc {
        n: spec.n(),
        set: spec.to_string(),
        matched: report.matched,
        tolerance: report.tolerance,
        max_deviation: report.max_deviation,
        first_mismatch: report.first_mismatch,
        matrix_order: numeric.len(),
        degree: exact.degree.to_string(),
        expanded_set_size: expanded,
        index_t: exact.index_t,
        component_count: components,
        violations,
    };
    let bad = !doc.violations.is_empty();
    let text = match request.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let mut rows = vec![
                ("n", doc.n.to_string()),
                ("set", doc.set.clone()),
                ("matched", doc.matched.to_string()),
                ("tolerance", format!("{:e}", doc.tolerance)),
                ("max_deviation", format!("{:e}", doc.max_deviation)),
                ("matrix_order", doc.matrix_order.to_string()),
                ("degree", doc.degree.clone()),
                ("expanded_set_size", doc.expanded_set_size.to_string()),
                ("index_t", doc.index_t.to_string()),
                ("component_count", doc.component_count.to_string()),
            ];
            for v in &doc.violations {
                rows.push(("violation", v.clone()));
            }
            key_value_csv(&rows)
        }
    };
    Ok((text, bad))
}

fn run_derangement_report(
    request: &CommandRequest,
    engine: &CharacterEngine,
) -> Result<(String, bool), Error> {
    let n = request.n;
    let (min_value, achievers) = spectra::derangement_min_eigenvalue(engine, n)?;
    // Known closed form: the smallest eigenvalue is -D_n / (n-1),
    // attained exactly by the standard shape once n >= 5.
    let expected = -Ratio::new(
        BigInt::from(derangement_count(n)),
        BigInt::from(n as i64 - 1),
    );
    let standard = Partition::new(vec![n - 1, 1]).expect("n >= 4");
    let unique_standard_expected = n >= 5;
    let unique_standard = achievers == [standard.clone()];
    let mut violations = Vec::new();
    if min_value != expected {
        violations.push(format!(
            "minimum {} differs from -D_n/(n-1) = {}",
            rational_string(&min_value),
            rational_string(&expected)
        ));
    }
    if !achievers.contains(&standard) {
        violations.push("standard shape does not attain the minimum".into());
    }
    if unique_standard_expected && !unique_standard {
        violations.push(format!(
            "minimum achieved by {} shapes, expected the standard shape alone",
            achievers.len()
        ));
    }
    let doc = DerangementDoc {
        n,
        min_value: rational_string(&min_value),
        renteln_value: rational_string(&expected),
        achievers: partition_strings(&achievers),
        unique_standard_expected,
        unique_standard,
        violations,
    };
    let bad = !doc.violations.is_empty();
    let text = match request.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let mut rows = vec![
                ("n", doc.n.to_string()),
                ("min_value", doc.min_value.clone()),
                ("renteln_value", doc.renteln_value.clone()),
                ("achievers", doc.achievers.join(";")),
                (
                    "unique_standard_expected",
                    doc.unique_standard_expected.to_string(),
                ),
                ("unique_standard", doc.unique_standard.to_string()),
            ];
            for v in &doc.violations {
                rows.push(("violation", v.clone()));
            }
            key_value_csv(&rows)
        }
    };
    Ok((text, bad))
}

fn run_gap_table(request: &CommandRequest) -> Result<(String, bool), Error> {
    let n = request.n;
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "gap table needs n >= 4, got {n}"
        )));
    }
    let n_i = n as i64;
    let floor = BigRational::from_integer(BigInt::from(n_i * (n_i - 2)));
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for t in 2..=n - 2 {
        let support: BTreeSet<usize> = [t].into();
        let a = spectra::standard_eigenvalue_closed_form(n, &support)?;
        let b = Ratio::from_integer(spectra::sign_eigenvalue_closed_form(n, &support)?);
        let gap = spectra::ab_gap(n, t)?;
        if a.clone() - b.clone() != gap {
            violations.push(format!("t = {t}: gap does not equal A(t) - B(t)"));
        }
        // Exact closed forms for the first three levels.
        let closed: Option<BigRational> = match t {
            2 => Some(Ratio::from_integer(BigInt::from(n_i * (n_i - 2)))),
            3 => Some(Ratio::from_integer(BigInt::from(-n_i * (n_i - 2)))),
            4 => Some(Ratio::from_integer(BigInt::from(
                n_i * (n_i - 2) * (n_i - 3) * (n_i - 4) / 2,
            ))),
            _ => None,
        };
        if let Some(closed) = closed {
            if gap != closed {
                violations.push(format!(
                    "t = {t}: gap {} differs from closed form {}",
                    rational_string(&gap),
                    rational_string(&closed)
                ));
            }
        }
        let asserted = n >= 7 && t != 3;
        let bound_ok = asserted.then(|| gap >= floor);
        if bound_ok == Some(false) {
            violations.push(format!(
                "t = {t}: gap {} below the floor n(n-2) = {}",
                rational_string(&gap),
                rational_string(&floor)
            ));
        }
        rows.push(GapRow {
            t,
            a: rational_string(&a),
            b: rational_string(&b),
            gap: rational_string(&gap),
            asserted,
            bound_ok,
        });
    }
    let quadratic_min = (n >= 7).then(|| {
        (5..=n_i - 2)
            .map(|t| spectra::ab_gap_quadratic(n_i, t))
            .min()
            .expect("window nonempty for n >= 7")
    });
    let doc = GapTableDoc {
        n,
        rows,
        quadratic_min,
        violations,
    };
    let bad = !doc.violations.is_empty();
    let text = match request.output {
        OutputFormat::Json => to_json(&doc)?,
        OutputFormat::Csv => {
            let mut out = String::from("t,a,b,gap,asserted,bound_ok\n");
            for row in &doc.rows {
                let bound = row
                    .bound_ok
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "-".into());
                out.push_str(&format!(
                    "{},{},{},{},{},{bound}\n",
                    row.t, row.a, row.b, row.gap, row.asserted
                ));
            }
            out
        }
    };
    Ok((text, bad))
}

// ============================================================================
// Documents
// ============================================================================

#[derive(Serialize)]
struct LineDoc {
    value: String,
    multiplicity: String,
    partitions: Vec<String>,
}

#[derive(Serialize)]
struct SpectrumDoc {
    n: usize,
    degree: String,
    index_t: u64,
    set: String,
    lines: Vec<LineDoc>,
}

#[derive(Serialize)]
struct AldousDoc {
    n: usize,
    set: String,
    degree: String,
    index_t: u64,
    holds: bool,
    strictly_second: String,
    standard_value: String,
    achievers: Vec<String>,
}

#[derive(Serialize)]
struct VerifyDoc {
    n: usize,
    set: String,
    matched: bool,
    tolerance: f64,
    max_deviation: f64,
    first_mismatch: Option<usize>,
    matrix_order: usize,
    degree: String,
    expanded_set_size: usize,
    index_t: u64,
    component_count: usize,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct Theorem1RowDoc {
    gamma: String,
    c1: usize,
    holds: bool,
    asserted: bool,
    expected_holds: Option<bool>,
}

#[derive(Serialize)]
struct Theorem1Doc {
    n: usize,
    rows: Vec<Theorem1RowDoc>,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct Lemma22RowDoc {
    gamma: String,
    c1: usize,
    max_value: String,
    standard_attained: bool,
    asserted: bool,
    achievers: Vec<String>,
}

#[derive(Serialize)]
struct Lemma22Doc {
    n: usize,
    rows: Vec<Lemma22RowDoc>,
    exceptions: Vec<String>,
}

#[derive(Serialize)]
struct Lemma25Doc {
    n: usize,
    bound: String,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct DerangementDoc {
    n: usize,
    min_value: String,
    renteln_value: String,
    achievers: Vec<String>,
    unique_standard_expected: bool,
    unique_standard: bool,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct GapRow {
    t: usize,
    a: String,
    b: String,
    gap: String,
    asserted: bool,
    bound_ok: Option<bool>,
}

#[derive(Serialize)]
struct GapTableDoc {
    n: usize,
    rows: Vec<GapRow>,
    quadratic_min: Option<i64>,
    violations: Vec<String>,
}

// ============================================================================
// Rendering
// ============================================================================

/// Renders an exact rational as `p` (denominator 1) or `p/q`.
pub fn rational_string(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn partition_strings(partitions: &[Partition]) -> Vec<String> {
    partitions.iter().map(|p| p.to_string()).collect()
}

fn to_json<T: Serialize>(doc: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(doc)
        .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn key_value_csv(rows: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (key, value) in rows {
        out.push_str(&format!("{key},{}\n", csv_quote(value)));
    }
    out
}

fn render_spectrum(
    output: OutputFormat,
    spec: &ConnectionSetSpec,
    full: &spectra::Spectrum,
) -> Result<String, Error> {
    match output {
        OutputFormat::Json => {
            let doc = SpectrumDoc {
                n: full.n,
                degree: full.degree.to_string(),
                index_t: full.index_t,
                set: spec.to_string(),
                lines: full
                    .lines
                    .iter()
                    .map(|line| LineDoc {
                        value: rational_string(&line.value),
                        multiplicity: line.multiplicity.to_string(),
                        partitions: partition_strings(&line.achievers),
                    })
                    .collect(),
            };
            to_json(&doc)
        }
        OutputFormat::Csv => {
            let mut out = String::from("value,multiplicity\n");
            for line in &full.lines {
                out.push_str(&format!(
                    "{},{}\n",
                    rational_string(&line.value),
                    line.multiplicity
                ));
            }
            Ok(out)
        }
    }
}

fn render_aldous(
    output: OutputFormat,
    spec: &ConnectionSetSpec,
    report: &spectra::AldousReport,
) -> Result<String, Error> {
    let doc = AldousDoc {
        n: spec.n(),
        set: spec.to_string(),
        degree: spec.set_size().to_string(),
        index_t: report.index_t,
        holds: report.holds,
        strictly_second: rational_string(&report.strictly_second),
        standard_value: rational_string(&report.standard_value),
        achievers: partition_strings(&report.achievers),
    };
    match output {
        OutputFormat::Json => to_json(&doc),
        OutputFormat::Csv => Ok(key_value_csv(&[
            ("n", doc.n.to_string()),
            ("set", doc.set.clone()),
            ("degree", doc.degree.clone()),
            ("index_t", doc.index_t.to_string()),
            ("holds", doc.holds.to_string()),
            ("strictly_second", doc.strictly_second.clone()),
            ("standard_value", doc.standard_value.clone()),
            ("achievers", doc.achievers.join(";")),
        ])),
    }
}

fn render_theorem1(output: OutputFormat, scan: &spectra::Theorem1Scan) -> Result<String, Error> {
    match output {
        OutputFormat::Json => {
            let doc = Theorem1Doc {
                n: scan.n,
                rows: scan
                    .rows
                    .iter()
                    .map(|row| Theorem1RowDoc {
                        gamma: row.gamma.to_string(),
                        c1: row.c1,
                        holds: row.holds,
                        asserted: row.asserted,
                        expected_holds: row.expected_holds,
                    })
                    .collect(),
                violations: scan.violations.iter().map(|g| g.to_string()).collect(),
            };
            to_json(&doc)
        }
        OutputFormat::Csv => {
            let mut out = String::from("gamma,c1,holds,asserted,expected_holds\n");
            for row in &scan.rows {
                let expected = row
                    .expected_holds
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "-".into());
                out.push_str(&format!(
                    "{},{},{},{},{expected}\n",
                    csv_quote(&row.gamma.to_string()),
                    row.c1,
                    row.holds,
                    row.asserted
                ));
            }
            Ok(out)
        }
    }
}

fn render_lemma22(output: OutputFormat, scan: &spectra::Lemma22Scan) -> Result<String, Error> {
    match output {
        OutputFormat::Json => {
            let doc = Lemma22Doc {
                n: scan.n,
                rows: scan
                    .rows
                    .iter()
                    .map(|row| Lemma22RowDoc {
                        gamma: row.gamma.to_string(),
                        c1: row.c1,
                        max_value: rational_string(&row.max_value),
                        standard_attained: row.standard_attained,
                        asserted: false,
                        achievers: partition_strings(&row.achievers),
                    })
                    .collect(),
                exceptions: scan.exceptions.iter().map(|g| g.to_string()).collect(),
            };
            to_json(&doc)
        }
        OutputFormat::Csv => {
            let mut out = String::from("gamma,c1,max_value,standard_attained,achievers\n");
            for row in &scan.rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_quote(&row.gamma.to_string()),
                    row.c1,
                    row.max_value,
                    row.standard_attained,
                    csv_quote(&partition_strings(&row.achievers).join(";"))
                ));
            }
            Ok(out)
        }
    }
}

fn render_lemma25(
    output: OutputFormat,
    n: usize,
    violations: &[Partition],
) -> Result<String, Error> {
    match output {
        OutputFormat::Json => to_json(&Lemma25Doc {
            n,
            bound: "dim(zeta)^20 >= n^41".into(),
            violations: violations.iter().map(|z| z.to_string()).collect(),
        }),
        OutputFormat::Csv => {
            let mut out = String::from("violation\n");
            for zeta in violations {
                out.push_str(&format!("{}\n", csv_quote(&zeta.to_string())));
            }
            Ok(out)
        }
    }
}

// ============================================================================
// Tests
// ============================================================================
