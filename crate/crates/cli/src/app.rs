//! Command implementations, shared input plumbing, and the exit-code
//! policy.  Everything here is deterministic on stdout for fixed flags;
//! progress and diagnostics go to stderr.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process;

use conjecture_checks::{
    char2_g7_experiment, duality_check, green_check, hilbert_identity_check, lefschetz_compare,
    noether_check, petri_check, trial_csv_header, CheckError, CheckReport,
};
use curve_forge::{
    build_entry, build_k3_with_section, canonical_quotient, corpus, find_entry, ingest_ideal,
    ingest_plane_model, parse_input, CorpusEntry, ExceptionalClass, ForgeError, InputFile,
    MetaKind,
};
use exact_core::{with_field, Field, FieldError, FieldSpec};
use graded_ring::{quotient_sequence, GradedQuotient, QuotientKind, RingError};
use koszul_engine::{betti_table, render_json, render_text, BettiTable, KoszulError};
use thiserror::Error;

/// Everything a command can fail with.  Check verdicts are not errors;
/// they surface through the `bool` a command returns.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Forge(#[from] ForgeError),

    #[error(transparent)]
    Check(#[from] CheckError),

    #[error(transparent)]
    Koszul(#[from] KoszulError),

    #[error(transparent)]
    Ring(#[from] RingError),

    #[error(transparent)]
    Field(#[from] FieldError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Writes command output to stdout without panicking when the consumer
/// hangs up early (`syzlab corpus | head`): a broken pipe ends the
/// process quietly with code 0 — the consumer truncated the output on
/// purpose — and any other write failure is reported on stderr and exits
/// with the input-error code.
fn emit(args: fmt::Arguments<'_>) {
    let mut out = io::stdout().lock();
    if let Err(err) = out.write_fmt(args) {
        if err.kind() == io::ErrorKind::BrokenPipe {
            process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {err}");
        process::exit(2);
    }
}

/// `println!` for command output, routed through [`emit`].
macro_rules! outln {
    ($($arg:tt)*) => {
        emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

fn forge_exit_code(err: &ForgeError) -> i32 {
    match err {
        ForgeError::ConstructionFailed { .. }
        | ForgeError::EmptyLinearSystem { .. }
        | ForgeError::AdjointDimensionMismatch { .. }
        | ForgeError::FieldTooSmall { .. }
        | ForgeError::GenusTooSmall(_)
        | ForgeError::ZeroForm => 3,
        _ => 2,
    }
}

/// Exit-code policy: 2 for input/schema problems, 3 for constructions
/// that ran and failed.  (Code 1, a check that ran and reported failure,
/// never goes through `CliError`.)
pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Forge(f) => forge_exit_code(f),
        CliError::Check(CheckError::Forge(f)) => forge_exit_code(f),
        // A comparison gate failing means the built object is unusable.
        CliError::Check(CheckError::GateFailed(_)) => 3,
        _ => 2,
    }
}

fn parse_spec(text: &str) -> Result<FieldSpec, CliError> {
    text.parse::<FieldSpec>().map_err(CliError::Field)
}

fn load_input(path: &Path) -> Result<InputFile, CliError> {
    let text = fs::read_to_string(path)?;
    Ok(parse_input(&text)?)
}

/// Build the graded quotient a model file describes, through degree `qmax`.
fn quotient_from_input<F: Field>(
    field: &F,
    file: &InputFile,
    qmax: usize,
) -> Result<GradedQuotient<F>, CliError> {
    match file {
        InputFile::Plane(pf) => {
            let model = ingest_plane_model(field, pf)?;
            let label = pf
                .meta
                .as_ref()
                .map(|m| m.name.clone())
                .unwrap_or_else(|| "plane_model".to_string());
            Ok(canonical_quotient(&model, qmax, &label)?)
        }
        InputFile::Ideal(idf) => {
            let gens = ingest_ideal(field, idf)?;
            let mut quotient = quotient_sequence(field, idf.nvars, &gens, qmax, &idf.label)?;
            if let Some(meta) = &idf.meta {
                let kind = match meta.kind {
                    MetaKind::Curve => QuotientKind::CanonicalCurve,
                    MetaKind::K3 => QuotientKind::K3,
                };
                quotient = quotient.with_meta(kind, meta.genus);
            }
            Ok(quotient)
        }
    }
}

fn class_str(class: ExceptionalClass) -> &'static str {
    match class {
        ExceptionalClass::None => "-",
        ExceptionalClass::Trigonal => "trigonal",
        ExceptionalClass::PlaneQuintic => "plane_quintic",
    }
}

fn kind_str(entry: &CorpusEntry) -> &'static str {
    match entry.kind() {
        MetaKind::Curve => "curve",
        MetaKind::K3 => "k3",
    }
}

/// `corpus`: list the built-in recipes with their metadata.
pub fn cmd_corpus() -> Result<bool, CliError> {
    outln!(
        "{:<18} {:<6} {:>5} {:<9} {:>4}  {:>5} {:>3}  {}",
        "name", "kind", "genus", "field", "seed", "cliff", "gon", "class"
    );
    for entry in corpus() {
        outln!(
            "{:<18} {:<6} {:>5} {:<9} {:>4}  {:>5} {:>3}  {}",
            entry.name,
            kind_str(entry),
            entry.genus,
            entry.default_field,
            entry.default_seed,
            entry.expected_clifford,
            entry.expected_gonality,
            class_str(entry.exceptional_class),
        );
    }
    Ok(false)
}

/// `build`: construct a corpus entry and write its model file.
pub fn cmd_build(
    entry_name: &str,
    field_arg: Option<&str>,
    seed_arg: Option<u64>,
    out: &Path,
) -> Result<bool, CliError> {
    let entry = find_entry(entry_name)?;
    let spec = parse_spec(field_arg.unwrap_or(entry.default_field))?;
    let seed = seed_arg.unwrap_or(entry.default_seed);
    eprintln!("building {entry_name} over {spec} from seed {seed}");
    let json = with_field!(spec, |field| {
        let built = build_entry(&field, entry, seed, 4)?;
        Ok::<_, CliError>(built.source.to_json())
    })?;
    fs::write(out, json + "\n")?;
    outln!(
        "wrote {} ({entry_name}, genus {}, {spec})",
        out.display(),
        entry.genus
    );
    Ok(false)
}

/// `betti`: compute and print the graded Betti table of a model file.
pub fn cmd_betti(input: &Path, qmax: usize, json: bool) -> Result<bool, CliError> {
    if !(4..=8).contains(&qmax) {
        return Err(CliError::Usage(format!(
            "--qmax must be between 4 (needed for the q = 3 row) and 8, got {qmax}"
        )));
    }
    let file = load_input(input)?;
    let spec = parse_spec(file.field_string())?;
    let table = with_field!(spec, |field| {
        let quotient = quotient_from_input(&field, &file, qmax)?;
        Ok::<_, CliError>(betti_table(&quotient)?)
    })?;
    if json {
        outln!("{}", render_json(&table));
    } else {
        emit(format_args!("{}", render_text(&table)));
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Noether,
    Petri,
    Duality,
    Hilbert,
    Green,
}

fn parse_suites(arg: &str) -> Result<Vec<Suite>, CliError> {
    let mut suites = Vec::new();
    for name in arg.split(',') {
        let suite = match name.trim() {
            "noether" => Suite::Noether,
            "petri" => Suite::Petri,
            "duality" => Suite::Duality,
            "hilbert" => Suite::Hilbert,
            "green" => Suite::Green,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite {other:?}; expected a comma list of \
                     noether, petri, duality, hilbert, green"
                )))
            }
        };
        if !suites.contains(&suite) {
            suites.push(suite);
        }
    }
    if suites.is_empty() {
        return Err(CliError::Usage("--suite must name at least one check".into()));
    }
    Ok(suites)
}

#[derive(Clone, Copy, Debug)]
enum CliffMode {
    Auto,
    Given(usize),
}

fn parse_cliff(arg: &str) -> Result<CliffMode, CliError> {
    if arg == "auto" {
        return Ok(CliffMode::Auto);
    }
    arg.parse::<usize>().map(CliffMode::Given).map_err(|_| {
        CliError::Usage(format!(
            "--cliff must be `auto` or a nonnegative integer, got {arg:?}"
        ))
    })
}

fn run_checks<F: Field>(
    field: &F,
    file: &InputFile,
    suites: &[Suite],
    cliff: CliffMode,
) -> Result<Vec<CheckReport>, CliError> {
    let quotient = quotient_from_input(field, file, 4)?;
    let needs_table = suites
        .iter()
        .any(|s| matches!(s, Suite::Duality | Suite::Hilbert | Suite::Green));
    let table: Option<BettiTable> = if needs_table {
        Some(betti_table(&quotient)?)
    } else {
        None
    };
    let mut reports = Vec::new();
    for suite in suites {
        let report = match suite {
            Suite::Noether => noether_check(&quotient, quotient.genus()),
            Suite::Petri => petri_check(&quotient),
            Suite::Duality => duality_check(table.as_ref().expect("table built"))?,
            Suite::Hilbert => {
                hilbert_identity_check(table.as_ref().expect("table built"), quotient.genus())?
            }
            Suite::Green => {
                let value = match cliff {
                    CliffMode::Given(c) => c,
                    CliffMode::Auto => file
                        .meta()
                        .and_then(|m| m.expected_clifford)
                        .ok_or_else(|| {
                            CliError::Usage(
                                "--cliff auto needs expected_clifford in the file's metadata; \
                                 pass an explicit --cliff <int>"
                                    .into(),
                            )
                        })?,
                };
                green_check(table.as_ref().expect("table built"), value)?.to_check_report()
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

/// `check`: run the named suites against a model file, one NDJSON row per
/// check on stdout.  Returns whether any check failed.
pub fn cmd_check(input: &Path, suite_arg: &str, cliff_arg: &str) -> Result<bool, CliError> {
    let suites = parse_suites(suite_arg)?;
    let cliff = parse_cliff(cliff_arg)?;
    let file = load_input(input)?;
    let spec = parse_spec(file.field_string())?;
    let reports = with_field!(spec, |field| run_checks(&field, &file, &suites, cliff))?;
    let mut any_failed = false;
    for report in &reports {
        outln!("{}", report.to_json_line());
        any_failed |= !report.passed;
    }
    Ok(any_failed)
}

/// `lefschetz`: build a surface entry together with its hyperplane-section
/// curve and compare their syzygy spaces cell by cell.
pub fn cmd_lefschetz(
    entry_name: &str,
    field_arg: Option<&str>,
    seed_arg: Option<u64>,
) -> Result<bool, CliError> {
    let entry = find_entry(entry_name)?;
    let spec = parse_spec(field_arg.unwrap_or(entry.default_field))?;
    let seed = seed_arg.unwrap_or(entry.default_seed);
    eprintln!("building {entry_name} and its section over {spec} from seed {seed}");
    let report = with_field!(spec, |field| {
        let (surface, curve) = build_k3_with_section(&field, entry, seed, 4)?;
        Ok::<_, CliError>(lefschetz_compare(&surface, &curve)?)
    })?;
    outln!("{}", report.to_json_line());
    Ok(!report.passed)
}

/// `char2-demo`: run the genus-7 characteristic-2 experiment.  Stdout
/// carries only the deterministic columns; wall-clock seconds go to the
/// optional CSV file.
pub fn cmd_char2_demo(trials: usize, seed: u64, csv: Option<&Path>) -> Result<bool, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    eprintln!("running {trials} genus-7 trial(s) over gf2e:4 and gf:1009 from seed {seed}");
    let (report, rows) = char2_g7_experiment(trials, seed)?;
    if let Some(path) = csv {
        let mut text = String::from(trial_csv_header());
        text.push('\n');
        for row in &rows {
            text.push_str(&row.to_csv_line());
            text.push('\n');
        }
        fs::write(path, text)?;
        eprintln!("per-trial CSV written to {}", path.display());
    }
    for row in &rows {
        outln!(
            "trial {} field {} beta_3_1 {} beta_2_2 {}",
            row.trial, row.field, row.beta_3_1, row.beta_2_2
        );
    }
    outln!("char2_g7: {}", if report.passed { "PASS" } else { "FAIL" });
    Ok(!report.passed)
}
