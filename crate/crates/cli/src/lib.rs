//! The `ydkit` command line: verification reports, classification tables and records,
//! the group-algebra cross-check and catalog export.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use ydkit_core::braided::{identity_suite, verify_qt, QTHopf, QtError};
use ydkit_core::catalog::{builtin, builtin_group, group_algebra, CatalogError};
use ydkit_core::exactfield::DEFAULT_MAX_DEN;
use ydkit_core::hopfcore::{verify_hopf, HopfAlgebra, Tensor};
use ydkit_core::shellio::{
    classification_record, export, load, render_identity_suite, render_table, render_verify, CheckRecord, LoadError,
};
use ydkit_core::ydclass::{
    centralizer_modules, check_divisibility, classify_splitting, crosscheck_group, decompose_h, dimension_identity,
    one_dim_yd, Classification, YdError,
};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_FIELD: i32 = 4;
pub const EXIT_CHECK: i32 = 5;

/// Largest cyclotomic order the classifier may widen to by default.
const DEFAULT_MAX_FIELD: u32 = 64;

#[derive(Parser, Debug)]
#[command(name = "ydkit", version, about = "Yetter-Drinfeld modules over quasi-triangular Hopf algebras")]
struct Cli {
    /// Skip the Hopf axiom check when loading a file.
    #[arg(long, global = true)]
    no_verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Built-in example (z2, z2_minus, s3, d4, q8, z<n>, h8).
    #[arg(long)]
    builtin: Option<String>,
    /// HopfFileV1 JSON file.
    path: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Tuning {
    /// Random seed; defaults to $YDKIT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Denominator bound for in-field root reconstruction.
    #[arg(long, default_value_t = DEFAULT_MAX_DEN)]
    max_den: u64,
    /// Largest cyclotomic order to widen the field to when a block does not split.
    #[arg(long, default_value_t = DEFAULT_MAX_FIELD)]
    max_field: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hopf axioms, quasi-triangularity and the identity suite.
    Verify {
        #[command(flatten)]
        input: Input,
    },
    /// Full classification: table, checks and optionally a JSON record.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        tuning: Tuning,
        /// Write the ClassificationRecordV1 JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Classification table only.
    Table {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Compare the pipeline with the centralizer construction on a group algebra.
    CrosscheckGroup {
        name: String,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Write a built-in as HopfFileV1 JSON.
    Export { name: String, path: PathBuf },
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Verify(String),
    #[error("{0}")]
    Field(String),
    #[error("{0}")]
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Verify(_) => EXIT_VERIFY,
            Failure::Field(_) => EXIT_FIELD,
            Failure::Check(_) => EXIT_CHECK,
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Verify { .. } => Failure::Verify(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

impl From<QtError> for Failure {
    fn from(e: QtError) -> Self {
        Failure::Verify(e.to_string())
    }
}

impl From<YdError> for Failure {
    fn from(e: YdError) -> Self {
        if e.is_field_not_splitting() {
            Failure::Field(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn read_input(input: &Input, verify: bool) -> Result<(HopfAlgebra, Tensor), Failure> {
    match (&input.builtin, &input.path) {
        (Some(name), _) => {
            let e = builtin(name)?;
            Ok((e.hopf, e.r_matrix))
        }
        (None, Some(path)) => Ok(load(path, verify)?),
        (None, None) => Err(Failure::Parse("no input given".into())),
    }
}

fn resolve_seed(seed: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = seed {
        return Ok(s);
    }
    match std::env::var("YDKIT_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("YDKIT_SEED is not an integer: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn qt_from(h: &HopfAlgebra, r: &Tensor) -> Result<QTHopf, Failure> {
    Ok(verify_qt(h, r)?)
}

fn classify(q: &QTHopf, tuning: &Tuning, seed: u64) -> Result<(QTHopf, Classification), Failure> {
    Ok(classify_splitting(q, seed, tuning.max_den, tuning.max_field)?)
}

fn cmd_verify(input: &Input, verify: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let (h, r) = read_input(input, verify)?;
    let report = verify_hopf(&h);
    writeln!(out, "Hopf axioms")?;
    write!(out, "{}", render_verify(&report))?;
    if let Some(bad) = report.first_failure() {
        return Err(Failure::Verify(format!("axiom {} fails", bad.axiom)));
    }
    let q = qt_from(&h, &r)?;
    writeln!(out, "quasi-triangular structure: pass")?;
    writeln!(out, "identity suite")?;
    let suite = identity_suite(&q);
    write!(out, "{}", render_identity_suite(&suite))?;
    match suite.iter().find(|c| c.outcome.is_fail()) {
        Some(bad) => Err(Failure::Check(format!("identity {} fails", bad.name))),
        None => Ok(()),
    }
}

fn cmd_classify(input: &Input, verify: bool, tuning: &Tuning, json: Option<&Path>, table_only: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let (h, r) = read_input(input, verify)?;
    let seed = resolve_seed(tuning.seed)?;
    let q = qt_from(&h, &r)?;
    let (lifted, c) = classify(&q, tuning, seed)?;
    write!(out, "{}", render_table(h.names(), &c))?;
    if table_only {
        return Ok(());
    }
    let blocks = decompose_h(&lifted, seed, tuning.max_den)?;
    let dims = dimension_identity(&lifted, &blocks, seed, tuning.max_den)?;
    let divisibility = check_divisibility(&c);
    let suite = identity_suite(&q);
    let checks = CheckRecord::new(&suite, &c, &divisibility, &dims);
    let ones = one_dim_yd(&lifted, seed, tuning.max_den)?;
    let ones_in_table = c.modules().filter(|(_, m)| m.module.dim() == 1).count();
    writeln!(out, "one-dimensional: {} from ZG(H) x characters, {} in the table", ones.len(), ones_in_table)?;
    let status = serde_json::to_value(&checks).map_err(|e| Failure::Check(e.to_string()))?;
    if let Some(map) = status.as_object() {
        let line: Vec<String> = map
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or("?")))
            .collect();
        writeln!(out, "checks: {}", line.join(" "))?;
    }
    if let Some(path) = json {
        let record = classification_record(&export(&h, &r), seed, tuning.max_den, &c, checks.clone());
        let text = serde_json::to_string_pretty(&record).map_err(|e| Failure::Check(e.to_string()))?;
        std::fs::write(path, text + "\n")?;
    }
    if checks.any_failed() || ones.len() != ones_in_table {
        return Err(Failure::Check("a classification check failed".into()));
    }
    Ok(())
}

fn cmd_crosscheck(name: &str, tuning: &Tuning, out: &mut dyn Write) -> Result<(), Failure> {
    let table = builtin_group(name)?;
    let seed = resolve_seed(tuning.seed)?;
    let (h, r) = group_algebra(&table, None)?;
    let q = qt_from(&h, &r)?;
    let (lifted, c) = classify(&q, tuning, seed)?;
    let oracle = centralizer_modules(&lifted, &table, seed, tuning.max_den)?;
    let report = crosscheck_group(&c, &oracle, seed);
    writeln!(out, "pipeline (block dim, module dim): {:?}", report.pipeline)?;
    writeln!(out, "oracle (class size, module dim):  {:?}", report.oracle)?;
    writeln!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check("pipeline and centralizer construction disagree".into()))
    }
}

fn cmd_export(name: &str, path: &Path, out: &mut dyn Write) -> Result<(), Failure> {
    let e = builtin(name)?;
    let text = serde_json::to_string_pretty(&export(&e.hopf, &e.r_matrix)).map_err(|e| Failure::Check(e.to_string()))?;
    std::fs::write(path, text + "\n")?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    let verify = !cli.no_verify;
    let result = match &cli.command {
        Command::Verify { input } => cmd_verify(input, verify, out),
        Command::Classify { input, tuning, json } => cmd_classify(input, verify, tuning, json.as_deref(), false, out),
        Command::Table { input, tuning } => cmd_classify(input, verify, tuning, None, true, out),
        Command::CrosscheckGroup { name, tuning } => cmd_crosscheck(name, tuning, out),
        Command::Export { name, path } => cmd_export(name, path, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            e.code()
        }
    }
}
