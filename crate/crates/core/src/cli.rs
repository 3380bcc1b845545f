//! Command-line front end.
//!
//! Exit codes: 0 success or statement holds, 1 unsolvable, 2 input error, 3 statement
//! false, 4 unsupported query, 5 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::extremal::{
    profile_completion_hermitian, profile_completion_psd, profile_completion_two,
    profile_linear_vs_p, profile_ls_vs_lr, profile_psd_linear_vs_p, profile_skew_pair,
    profile_two_congruence, profile_two_linear, CompletionSpec, ProfileReport, Sign,
};
use crate::io::{parse_matrix, serialize_matrix};
use crate::matrix::Matrix;
use crate::oracle::{
    envelope_suite, identity_suite, special_case_suite, tally, Counterexample, EnvelopeSuiteReport,
    Fault, ProfileKind, SuiteConfig,
};
use crate::ordering::{
    decide_average_equality, decide_linear_vs_p, decide_ls_vs_lr, decide_psd_linear_vs_p,
    decide_row_partition_average, decide_sum_decomposition_average, decide_transformed_ordering,
    decide_transformed_set_equality, decide_two_congruence, decide_two_congruence_invariance,
    decide_two_linear, Invariance, Mode, OrderingQuery, Relation, Verdict,
};
use crate::sample::Sampler;
use crate::solutions::{
    check_congruence, check_linear_hermitian, check_linear_psd, CongruenceEqSpec, CongruenceFamily,
    HermitianFamily, LinearEqSpec, PsdFamily, SolvabilityCertificate,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod exit {
    pub const OK: i32 = 0;
    pub const UNSOLVABLE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const FALSE: i32 = 3;
    pub const UNSUPPORTED: i32 = 4;
    pub const VERIFICATION: i32 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {message}")]
    File { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => match e {
                Error::Unsolvable(_) | Error::RangeHypothesisViolated(_) => exit::UNSOLVABLE,
                Error::UnsupportedQuery(_) => exit::UNSUPPORTED,
                Error::RouteDisagreement(_) | Error::FormulaRange { .. } => exit::VERIFICATION,
                Error::DimensionMismatch(_)
                | Error::NotHermitian(_)
                | Error::NotPsd(_)
                | Error::InvalidArgument(_) => exit::INPUT,
            },
            CliError::File { .. } | CliError::Usage(_) => exit::INPUT,
            CliError::Verification(_) => exit::VERIFICATION,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hermsol",
    version,
    about = "Exact analysis of Hermitian solutions of AX = B and AXA* = B"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Linear,
    LinearPsd,
    Congruence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileCmdKind {
    LinearVsP,
    PsdVsP,
    TwoLinear,
    TwoCongruence,
    Completion,
    CompletionPsd,
    CompletionTwo,
    Skew,
    LsVsLr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    LinearVsP,
    PsdVsP,
    TwoLinear,
    TwoCongruence,
    CongruenceInvariance,
    Transformed,
    TransformedSet,
    Average,
    RowPartition,
    SumDecomposition,
    LsVsLr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvarianceArg {
    Rank,
    Inertia,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Envelopes,
    SpecialCases,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solvability certificate and one verified solution.
    Solve {
        #[arg(value_enum)]
        kind: SolveKind,
        a: PathBuf,
        b: PathBuf,
        /// Free parameter (U for linear and congruence, V for linear-psd).
        #[arg(long)]
        param_file: Option<PathBuf>,
    },
    /// Closed-form extremal ranks and inertias.
    Profile {
        #[arg(value_enum)]
        kind: ProfileCmdKind,
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Ordering, nonsingularity and set-relation statements.
    Order {
        #[arg(value_enum)]
        kind: OrderKind,
        #[arg(long)]
        relation: Option<Relation>,
        #[arg(long)]
        mode: Option<Mode>,
        /// Number of rows in the first block (row-partition).
        #[arg(long)]
        split: Option<usize>,
        #[arg(long, value_enum)]
        invariance: Option<InvarianceArg>,
        files: Vec<PathBuf>,
    },
    /// Oracle suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Parameter draws per envelope instance.
        #[arg(long, default_value_t = 500)]
        draws: usize,
        /// Where a failing instance is written.
        #[arg(long, default_value = "hermsol-counterexample.json")]
        counterexample_out: PathBuf,
        /// Re-run a saved counterexample instead of a suite.
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Result section of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Outcome {
    #[serde(rename_all = "camelCase")]
    Certificate {
        certificate: SolvabilityCertificate,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        solution: Option<Matrix>,
        verified: bool,
    },
    Profile(ProfileReport),
    Verdict(Verdict),
    Verify(VerifySummary),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCount {
    pub name: String,
    pub total: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifySummary {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identities: Option<Vec<IdentityCount>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub envelopes: Option<EnvelopeSuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub special_cases: Option<Vec<IdentityCount>>,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample_file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub version: String,
    pub command: Vec<String>,
    /// SHA-256 of the canonical serialization of every input, in order.
    pub input_digest: String,
    pub result: Outcome,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> CliResult<Report> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "hermsol {}", self.version);
        let _ = writeln!(s, "command: {}", self.command.join(" "));
        let _ = writeln!(s, "input digest: {}", self.input_digest);
        match &self.result {
            Outcome::Certificate {
                certificate,
                solution,
                verified,
            } => {
                let _ = writeln!(s, "solvable: {}", certificate.solvable);
                for c in &certificate.conditions {
                    let _ = writeln!(
                        s,
                        "  [{}] {}",
                        if c.holds { "ok" } else { "FAILED" },
                        c.label
                    );
                }
                if let Some(x) = solution {
                    let _ = writeln!(s, "solution (verified: {verified}):");
                    let _ = write!(s, "{x}");
                    if !s.ends_with('\n') {
                        s.push('\n');
                    }
                }
            }
            Outcome::Profile(p) => {
                let _ = writeln!(s, "profile: {}", p.profile);
                if let Some(simple) = &p.simplified {
                    let same = if *simple == p.profile {
                        "equal"
                    } else {
                        "DIFFERENT"
                    };
                    let _ = writeln!(s, "simplified branch: {simple} ({same})");
                }
                for e in &p.evidence {
                    evidence_line(&mut s, &e.label, e.value);
                }
            }
            Outcome::Verdict(v) => {
                let _ = writeln!(s, "statement: {}", v.statement);
                let _ = writeln!(s, "holds: {}", v.holds);
                let _ = writeln!(s, "route: {:?}", v.route);
                for e in &v.evidence {
                    evidence_line(&mut s, &e.label, e.value);
                }
            }
            Outcome::Verify(v) => {
                for (title, list) in [
                    ("identities", &v.identities),
                    ("special cases", &v.special_cases),
                ] {
                    if let Some(list) = list {
                        let _ = writeln!(s, "{title}:");
                        for c in list {
                            let _ = writeln!(s, "  {}/{}  {}", c.passed, c.total, c.name);
                        }
                    }
                }
                if let Some(env) = &v.envelopes {
                    let _ = writeln!(
                        s,
                        "envelopes (contained / max attained / min attained of instances):"
                    );
                    for k in &env.summaries {
                        let _ = writeln!(
                            s,
                            "  {:<15} {}/{}  {}/{}  {}/{}",
                            k.kind.as_str(),
                            k.contained,
                            k.instances,
                            k.max_attained,
                            k.instances,
                            k.min_attained,
                            k.instances
                        );
                    }
                }
                let _ = writeln!(s, "violations: {}", v.violations);
                if let Some(f) = &v.counterexample_file {
                    let _ = writeln!(s, "counterexample written to {f}");
                }
            }
        }
        s
    }
}

/// Predicate evidence is stored as 0/1; print it as a truth value.
fn evidence_line(s: &mut String, label: &str, value: impl std::fmt::Display) {
    let value = value.to_string();
    let is_predicate = label.contains(['=', '⊆', '≽']) && (value == "0" || value == "1");
    if is_predicate {
        let _ = writeln!(s, "  {label}: {}", if value == "1" { "yes" } else { "no" });
    } else {
        let _ = writeln!(s, "  {label} = {value}");
    }
}

struct Inputs {
    digest: Sha256,
}

impl Inputs {
    fn new() -> Self {
        Self {
            digest: Sha256::new(),
        }
    }

    fn matrix(&mut self, path: &Path) -> CliResult<Matrix> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::File {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let m = parse_matrix(&text).map_err(|e| CliError::File {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        self.digest.update(serialize_matrix(&m).as_bytes());
        Ok(m)
    }

    fn matrices(&mut self, files: &[PathBuf], names: &[&str]) -> CliResult<Vec<Matrix>> {
        if files.len() != names.len() {
            return Err(CliError::Usage(format!(
                "expected {} files ({}), got {}",
                names.len(),
                names.join(" "),
                files.len()
            )));
        }
        files.iter().map(|f| self.matrix(f)).collect()
    }

    fn text(&mut self, s: &str) {
        self.digest.update(s.as_bytes());
    }

    fn finish(self) -> String {
        format!("{:x}", self.digest.finalize())
    }
}

fn hermitian_param(seed: u64, n: usize) -> Matrix {
    Sampler::new(seed, 5).hermitian(n)
}

fn solve(
    inputs: &mut Inputs,
    kind: SolveKind,
    a: &Path,
    b: &Path,
    param: Option<&Path>,
    seed: u64,
) -> CliResult<(Outcome, i32)> {
    let (a, b) = (inputs.matrix(a)?, inputs.matrix(b)?);
    let param = param.map(|p| inputs.matrix(p)).transpose()?;
    let n = a.cols();
    let (certificate, solution) = match kind {
        SolveKind::Linear => {
            let spec = LinearEqSpec::new(a, b)?;
            let cert = check_linear_hermitian(&spec);
            let x = if cert.solvable {
                let u = param.unwrap_or_else(|| hermitian_param(seed, n));
                let x = HermitianFamily::new(&spec)?.member(&u)?;
                let ok = x.is_hermitian() && spec.a() * &x == *spec.b();
                Some((x, ok))
            } else {
                None
            };
            (cert, x)
        }
        SolveKind::LinearPsd => {
            let spec = LinearEqSpec::new(a, b)?;
            let cert = check_linear_psd(&spec);
            let x = if cert.solvable {
                let v = param.unwrap_or_else(|| Sampler::new(seed, 5).matrix(n, n));
                let x = PsdFamily::new(&spec)?.member(&v)?;
                let ok = crate::linalg::is_psd(&x)? && spec.a() * &x == *spec.b();
                Some((x, ok))
            } else {
                None
            };
            (cert, x)
        }
        SolveKind::Congruence => {
            let spec = CongruenceEqSpec::new(a, b)?;
            let cert = check_congruence(&spec);
            let x = if cert.solvable {
                let u = param.unwrap_or_else(|| Sampler::new(seed, 5).matrix(n, n));
                let x = CongruenceFamily::new(&spec)?.member(&u)?;
                let ok = crate::oracle::solves(&spec, &x);
                Some((x, ok))
            } else {
                None
            };
            (cert, x)
        }
    };
    let code = match &solution {
        None => exit::UNSOLVABLE,
        Some((_, false)) => exit::VERIFICATION,
        Some((_, true)) => exit::OK,
    };
    let verified = solution.as_ref().map(|s| s.1).unwrap_or(false);
    Ok((
        Outcome::Certificate {
            certificate,
            solution: solution.map(|s| s.0),
            verified,
        },
        code,
    ))
}

fn profile(
    inputs: &mut Inputs,
    kind: ProfileCmdKind,
    files: &[PathBuf],
    sign: SignArg,
) -> CliResult<Outcome> {
    use ProfileCmdKind as K;
    let report = match kind {
        K::LinearVsP | K::PsdVsP => {
            let [a, b, p]: [Matrix; 3] = inputs
                .matrices(files, &["A", "B", "P"])?
                .try_into()
                .expect("3");
            let spec = LinearEqSpec::new(a, b)?;
            if kind == K::LinearVsP {
                profile_linear_vs_p(&spec, &p)?
            } else {
                profile_psd_linear_vs_p(&spec, &p)?
            }
        }
        K::TwoLinear => {
            let [a, b, c, d]: [Matrix; 4] = inputs
                .matrices(files, &["A", "B", "C", "D"])?
                .try_into()
                .expect("4");
            profile_two_linear(&LinearEqSpec::new(a, b)?, &LinearEqSpec::new(c, d)?)?
        }
        K::TwoCongruence => {
            let [a1, b1, a2, b2]: [Matrix; 4] = inputs
                .matrices(files, &["A1", "B1", "A2", "B2"])?
                .try_into()
                .expect("4");
            profile_two_congruence(
                &CongruenceEqSpec::new(a1, b1)?,
                &CongruenceEqSpec::new(a2, b2)?,
            )?
        }
        K::Completion => {
            let [a, b]: [Matrix; 2] = inputs.matrices(files, &["A", "B"])?.try_into().expect("2");
            profile_completion_hermitian(&CompletionSpec::hermitian(a, b)?)?
        }
        K::CompletionPsd => {
            let [a, b]: [Matrix; 2] = inputs.matrices(files, &["A", "B"])?.try_into().expect("2");
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            inputs.text(if sign == Sign::Plus { "+" } else { "-" });
            profile_completion_psd(&CompletionSpec::psd(a, b, sign)?)?
        }
        K::CompletionTwo => {
            let [a, b, c]: [Matrix; 3] = inputs
                .matrices(files, &["A", "B", "C"])?
                .try_into()
                .expect("3");
            profile_completion_two(&CompletionSpec::two(a, b, c)?)?
        }
        K::Skew => {
            if files.len() == 3 {
                let [a, b, c]: [Matrix; 3] = inputs
                    .matrices(files, &["A", "B", "C"])?
                    .try_into()
                    .expect("3");
                profile_skew_pair(&a, &b, Some(&c))?
            } else {
                let [a, b]: [Matrix; 2] =
                    inputs.matrices(files, &["A", "B"])?.try_into().expect("2");
                profile_skew_pair(&a, &b, None)?
            }
        }
        K::LsVsLr => {
            let [a, b]: [Matrix; 2] = inputs.matrices(files, &["A", "B"])?.try_into().expect("2");
            profile_ls_vs_lr(&CongruenceEqSpec::new(a, b)?)?
        }
    };
    Ok(Outcome::Profile(report))
}

fn query(relation: Option<Relation>, mode: Option<Mode>) -> CliResult<OrderingQuery> {
    match (relation, mode) {
        (Some(r), Some(m)) => Ok(OrderingQuery::new(r, m)),
        _ => Err(CliError::Usage(
            "this statement needs --relation and --mode".into(),
        )),
    }
}

fn order(
    inputs: &mut Inputs,
    kind: OrderKind,
    relation: Option<Relation>,
    mode: Option<Mode>,
    split: Option<usize>,
    invariance: Option<InvarianceArg>,
    files: &[PathBuf],
) -> CliResult<Outcome> {
    use OrderKind as K;
    if let (Some(r), Some(m)) = (relation, mode) {
        inputs.text(&format!("{} {}", m.as_str(), r.as_str()));
    }
    let cong = |v: &mut Vec<Matrix>| -> CliResult<CongruenceEqSpec> {
        let b = v.remove(1);
        let a = v.remove(0);
        Ok(CongruenceEqSpec::new(a, b)?)
    };
    let verdict = match kind {
        K::LinearVsP | K::PsdVsP => {
            let q = query(relation, mode)?;
            let [a, b, p]: [Matrix; 3] = inputs
                .matrices(files, &["A", "B", "P"])?
                .try_into()
                .expect("3");
            let spec = LinearEqSpec::new(a, b)?;
            if kind == K::LinearVsP {
                decide_linear_vs_p(&spec, &p, q)?
            } else {
                decide_psd_linear_vs_p(&spec, &p, q)?
            }
        }
        K::TwoLinear => {
            let q = query(relation, mode)?;
            let [a, b, c, d]: [Matrix; 4] = inputs
                .matrices(files, &["A", "B", "C", "D"])?
                .try_into()
                .expect("4");
            decide_two_linear(&LinearEqSpec::new(a, b)?, &LinearEqSpec::new(c, d)?, q)?
        }
        K::TwoCongruence | K::CongruenceInvariance => {
            let mut v = inputs.matrices(files, &["A1", "B1", "A2", "B2"])?;
            let s2 = CongruenceEqSpec::new(v.remove(2), v.remove(2))?;
            let s1 = cong(&mut v)?;
            if kind == K::TwoCongruence {
                decide_two_congruence(&s1, &s2, query(relation, mode)?)?
            } else {
                let which = match invariance {
                    Some(InvarianceArg::Rank) => Invariance::Rank,
                    Some(InvarianceArg::Inertia) => Invariance::Inertia,
                    None => {
                        return Err(CliError::Usage(
                            "congruence-invariance needs --invariance".into(),
                        ))
                    }
                };
                decide_two_congruence_invariance(&s1, &s2, which)?
            }
        }
        K::Transformed | K::TransformedSet => {
            let mut v = inputs.matrices(files, &["A", "B", "T"])?;
            let t = v.pop().expect("T");
            let spec = cong(&mut v)?;
            if kind == K::Transformed {
                decide_transformed_ordering(&spec, &t, query(relation, mode)?)?
            } else {
                decide_transformed_set_equality(&spec, &t)?
            }
        }
        K::Average => {
            let mut v = inputs.matrices(files, &["A", "B", "T1", "T2"])?;
            let t2 = v.pop().expect("T2");
            let t1 = v.pop().expect("T1");
            decide_average_equality(&cong(&mut v)?, &t1, &t2)?
        }
        K::RowPartition => {
            let split =
                split.ok_or_else(|| CliError::Usage("row-partition needs --split".into()))?;
            inputs.text(&format!("split {split}"));
            let mut v = inputs.matrices(files, &["A", "B"])?;
            decide_row_partition_average(&cong(&mut v)?, split)?
        }
        K::SumDecomposition => {
            let mut v = inputs.matrices(files, &["A", "B", "A1"])?;
            let a1 = v.pop().expect("A1");
            decide_sum_decomposition_average(&cong(&mut v)?, &a1)?
        }
        K::LsVsLr => {
            let q = query(relation, mode)?;
            let mut v = inputs.matrices(files, &["A", "B"])?;
            decide_ls_vs_lr(&cong(&mut v)?, q)?
        }
    };
    Ok(Outcome::Verdict(verdict))
}

/// Record written when a suite fails; `verify --replay` re-runs it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "camelCase")]
pub enum ReplayRecord {
    Envelope(Counterexample),
    #[serde(rename_all = "camelCase")]
    Identities {
        seed: u64,
        trials: usize,
        max_dim: usize,
        failed: Vec<String>,
    },
    #[serde(rename_all = "camelCase")]
    SpecialCases {
        seed: u64,
        trials: usize,
        max_dim: usize,
        failed: Vec<String>,
    },
}

fn counts(t: Vec<(String, usize, usize)>) -> Vec<IdentityCount> {
    t.into_iter()
        .map(|(name, total, passed)| IdentityCount {
            name,
            total,
            passed,
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn verify(
    inputs: &mut Inputs,
    suite: Suite,
    seed: u64,
    trials: usize,
    max_dim: usize,
    draws: usize,
    out_path: &Path,
    fault: bool,
) -> CliResult<(Outcome, i32)> {
    let cfg = SuiteConfig {
        draws,
        fault: if fault { Fault::ShiftRank } else { Fault::None },
        ..SuiteConfig::new(seed, trials, max_dim)
    };
    inputs.text(&serde_json::to_string(&(suite as u8, &cfg)).expect("plain data"));
    let mut summary = VerifySummary {
        identities: None,
        envelopes: None,
        special_cases: None,
        violations: 0,
        counterexample_file: None,
    };
    let mut record: Option<ReplayRecord> = None;
    if matches!(suite, Suite::Identities | Suite::All) {
        let reports = identity_suite(seed, trials, max_dim)?;
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.holds)
            .map(|r| r.name.clone())
            .collect();
        summary.violations += failed.len();
        if !failed.is_empty() {
            record.get_or_insert(ReplayRecord::Identities {
                seed,
                trials,
                max_dim,
                failed,
            });
        }
        summary.identities = Some(counts(tally(&reports)));
    }
    if matches!(suite, Suite::Envelopes | Suite::All) {
        let env = envelope_suite(&cfg, &ProfileKind::ALL)?;
        summary.violations += env.violations();
        if let Some(cx) = &env.counterexample {
            record.get_or_insert(ReplayRecord::Envelope(cx.clone()));
        }
        summary.envelopes = Some(env);
    }
    if matches!(suite, Suite::SpecialCases | Suite::All) {
        let rep = special_case_suite(seed, trials, max_dim)?;
        let failed: Vec<String> = rep.failures().iter().map(|c| c.name.clone()).collect();
        summary.violations += failed.len();
        if !failed.is_empty() {
            record.get_or_insert(ReplayRecord::SpecialCases {
                seed,
                trials,
                max_dim,
                failed,
            });
        }
        let as_reports: Vec<(String, usize, usize)> = {
            let mut t: Vec<(String, usize, usize)> = Vec::new();
            for c in &rep.checks {
                match t.iter_mut().find(|e| e.0 == c.name) {
                    Some(e) => {
                        e.1 += 1;
                        e.2 += c.holds as usize;
                    }
                    None => t.push((c.name.clone(), 1, c.holds as usize)),
                }
            }
            t
        };
        summary.special_cases = Some(counts(as_reports));
    }
    if let Some(rec) = record {
        write_record(out_path, &rec)?;
        summary.counterexample_file = Some(out_path.display().to_string());
    }
    let code = if summary.violations == 0 {
        exit::OK
    } else {
        exit::VERIFICATION
    };
    Ok((Outcome::Verify(summary), code))
}

fn write_record(path: &Path, rec: &ReplayRecord) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(rec).expect("plain data");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn replay(inputs: &mut Inputs, path: &Path) -> CliResult<(Outcome, i32)> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    inputs.text(&text);
    let rec: ReplayRecord = serde_json::from_str(&text).map_err(|e| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let mut summary = VerifySummary {
        identities: None,
        envelopes: None,
        special_cases: None,
        violations: 0,
        counterexample_file: None,
    };
    match rec {
        ReplayRecord::Envelope(cx) => {
            let report = cx.replay()?;
            let ok = report.min_consistent;
            summary.violations = (!ok) as usize;
            summary.envelopes = Some(EnvelopeSuiteReport {
                summaries: vec![crate::oracle::KindSummary {
                    kind: cx.kind,
                    instances: 1,
                    contained: ok as usize,
                    max_attained: report.max_attained as usize,
                    min_attained: report.min_attained as usize,
                }],
                counterexample: (!ok).then_some(Counterexample { report, ..cx }),
            });
        }
        ReplayRecord::Identities {
            seed,
            trials,
            max_dim,
            ..
        } => {
            let reports = identity_suite(seed, trials, max_dim)?;
            summary.violations = reports.iter().filter(|r| !r.holds).count();
            summary.identities = Some(counts(tally(&reports)));
        }
        ReplayRecord::SpecialCases {
            seed,
            trials,
            max_dim,
            ..
        } => {
            let rep = special_case_suite(seed, trials, max_dim)?;
            summary.violations = rep.failures().len();
        }
    }
    let code = if summary.violations == 0 {
        exit::OK
    } else {
        exit::VERIFICATION
    };
    Ok((Outcome::Verify(summary), code))
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> CliResult<(Outcome, i32)> {
    match &cli.command {
        Command::Solve {
            kind,
            a,
            b,
            param_file,
        } => solve(inputs, *kind, a, b, param_file.as_deref(), cli.seed),
        Command::Profile { kind, files, sign } => {
            Ok((profile(inputs, *kind, files, *sign)?, exit::OK))
        }
        Command::Order {
            kind,
            relation,
            mode,
            split,
            invariance,
            files,
        } => {
            let outcome = order(inputs, *kind, *relation, *mode, *split, *invariance, files)?;
            let holds = matches!(&outcome, Outcome::Verdict(v) if v.holds);
            Ok((outcome, if holds { exit::OK } else { exit::FALSE }))
        }
        Command::Verify {
            suite,
            trials,
            max_dim,
            draws,
            counterexample_out,
            replay: replay_path,
            inject_fault,
        } => {
            if *trials == 0 || *max_dim == 0 || *draws == 0 {
                return Err(CliError::Usage(
                    "--trials, --max-dim and --draws must be at least 1".into(),
                ));
            }
            match replay_path {
                Some(p) => replay(inputs, p),
                None => verify(
                    inputs,
                    *suite,
                    cli.seed,
                    *trials,
                    *max_dim,
                    *draws,
                    counterexample_out,
                    *inject_fault,
                ),
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::INPUT,
            };
            let sink: &mut dyn Write = if code == exit::OK { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut inputs = Inputs::new();
    match dispatch(&cli, &mut inputs) {
        Ok((result, code)) => {
            let report = Report {
                version: VERSION.to_string(),
                command: args
                    .iter()
                    .skip(1)
                    .map(|a| a.to_string_lossy().into_owned())
                    .collect(),
                input_digest: inputs.finish(),
                result,
            };
            let text = match cli.output {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
