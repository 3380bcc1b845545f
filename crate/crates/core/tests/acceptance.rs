//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use hermsol::extremal::{
    linear_vs_p_via_completion, profile_linear_vs_p, profile_ls_vs_lr, profile_psd_linear_vs_p,
    psd_linear_vs_p_via_completion, ExtremalProfile,
};
use hermsol::io::{parse_matrix, serialize_matrix};
use hermsol::linalg::pinv_matrix;
use hermsol::matrix::Matrix;
use hermsol::oracle::{
    average_trial, envelope_suite, generate_instance, identity_suite, inertia_law_suite, tally,
    transformed_trial, Instance, InstanceRecipe, ProfileKind, RecipeKind, SuiteConfig,
};
use hermsol::ordering::{
    decide_average_equality, decide_linear_vs_p, decide_ls_vs_lr, decide_psd_linear_vs_p,
    decide_row_partition_average, decide_sum_decomposition_average, decide_transformed_ordering,
    decide_transformed_set_equality, decide_two_congruence, decide_two_congruence_invariance,
    decide_two_linear, Invariance, OrderingQuery, Relation, Verdict,
};
use hermsol::sample::{derive_seed, Sampler};
use hermsol::scalar::GaussianRational;
use hermsol::solutions::{
    CongruenceEqSpec, CongruenceFamily, HermitianFamily, LinearEqSpec, PsdFamily,
};
use hermsol::Error;
use num_traits::{Signed, Zero};

const SEED: u64 = 20_260_101;
const BOUND: i64 = 5;
const MAX_DIM: usize = 5;
/// Envelope sweeps use a smaller ceiling; every kind still reaches 4 x 4 blocks and larger.
const ENVELOPE_MAX_DIM: usize = 4;

const PENROSE_MATRICES: usize = 500;
const PENROSE_BUDGET: Duration = Duration::from_secs(10);
const INERTIA_TRIALS: usize = 500;
const IDENTITY_TRIALS: usize = 200;
const SOLUTION_INSTANCES: usize = 100;
const SOLUTION_DRAWS: usize = 100;
const ENVELOPE_INSTANCES: usize = 50;
const ENVELOPE_DRAWS: usize = 500;
const ENVELOPE_CONTAINMENT: f64 = 1.0;
const ENVELOPE_MAX_ATTAINED: f64 = 0.95;
const CROSS_CHECK_INSTANCES: usize = 200;
const TRANSFORMED_INSTANCES: usize = 100;
const TRANSFORMED_DRAWS: usize = 200;
const TRANSFORMED_DETECTION: f64 = 0.95;
const AVERAGE_INSTANCES: usize = 100;
const AVERAGE_DRAWS: usize = 50;
const IDENTITY_A_INSTANCES: usize = 100;
const ROUTE_INSTANCES: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn spec_lin(a: &Matrix, b: &Matrix) -> LinearEqSpec {
    LinearEqSpec::new(a.clone(), b.clone()).unwrap()
}

fn spec_cong(a: &Matrix, b: &Matrix) -> CongruenceEqSpec {
    CongruenceEqSpec::new(a.clone(), b.clone()).unwrap()
}

fn instance(seed: u64, kind: RecipeKind, max_dim: usize) -> Instance {
    generate_instance(&InstanceRecipe::random(seed, kind, max_dim, BOUND))
}

/// Determinant by Gaussian elimination with nonzero pivoting.
fn det(m: &Matrix) -> GaussianRational {
    let n = m.rows();
    let mut rows: Vec<Vec<GaussianRational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut acc = GaussianRational::from_int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
            return GaussianRational::default();
        };
        if p != c {
            rows.swap(p, c);
            acc = -acc;
        }
        let pivot = rows[c][c].clone();
        acc = &acc * &pivot;
        for r in c + 1..n {
            let f = &rows[r][c] / &pivot;
            for k in c..n {
                let v = &rows[r][k] - &(&f * &rows[c][k]);
                rows[r][k] = v;
            }
        }
    }
    acc
}

/// PSD by nonnegative principal minors.
fn psd_by_minors(x: &Matrix) -> bool {
    let n = x.rows();
    x.is_hermitian()
        && (1u32..(1 << n)).all(|mask| {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let d = det(&x.select_rows(&idx).select_columns(&idx));
            d.im().is_zero() && !d.re().is_negative()
        })
}

fn penrose() -> Outcome {
    let start = Instant::now();
    let mut ok = 0;
    for t in 0..PENROSE_MATRICES {
        let mut s = Sampler::new(derive_seed(SEED, t as u64), BOUND).complex(t % 3 == 0);
        let m = s.integer(1, MAX_DIM as i64) as usize;
        let n = s.integer(1, MAX_DIM as i64) as usize;
        let a = if t % 2 == 0 {
            s.any_rank(m, n)
        } else {
            s.matrix(m, n)
        };
        let g = pinv_matrix(&a);
        let ag = &a * &g;
        let ga = &g * &a;
        let holds = &ag * &a == a && &ga * &g == g && ag.is_hermitian() && ga.is_hermitian();
        ok += holds as usize;
    }
    let elapsed = start.elapsed();
    outcome(
        ok == PENROSE_MATRICES && elapsed < PENROSE_BUDGET,
        format!(
            "{ok}/{PENROSE_MATRICES} satisfy all four equations in {:.2} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn identity_counts(reports: Vec<(String, usize, usize)>, min_each: usize) -> Outcome {
    let failing: Vec<&String> = reports
        .iter()
        .filter(|r| r.2 != r.1)
        .map(|r| &r.0)
        .collect();
    let thin: Vec<&String> = reports
        .iter()
        .filter(|r| r.1 < min_each)
        .map(|r| &r.0)
        .collect();
    let total: usize = reports.iter().map(|r| r.1).sum();
    let least = reports.iter().map(|r| r.1).min().unwrap_or(0);
    outcome(
        failing.is_empty() && thin.is_empty(),
        format!(
            "{} identities, {total} checks, fewest instances {least}, failing {failing:?}, under-sampled {thin:?}",
            reports.len()
        ),
    )
}

fn inertia_laws() -> Outcome {
    identity_counts(
        tally(&inertia_law_suite(SEED, INERTIA_TRIALS, MAX_DIM).unwrap()),
        INERTIA_TRIALS,
    )
}

fn identities() -> Outcome {
    identity_counts(
        tally(&identity_suite(SEED, IDENTITY_TRIALS, MAX_DIM).unwrap()),
        IDENTITY_TRIALS,
    )
}

fn solution_validity() -> Outcome {
    let mut checks = 0;
    let mut failures = 0;
    for t in 0..SOLUTION_INSTANCES {
        let seed = derive_seed(SEED ^ 0x4, t as u64);
        let mut s = Sampler::new(seed, BOUND).complex(t % 2 == 0);
        if let Instance::LinearHermitian { a, b, .. } =
            instance(seed, RecipeKind::LinearHermitian, MAX_DIM)
        {
            let fam = HermitianFamily::new(&spec_lin(&a, &b)).unwrap();
            for _ in 0..SOLUTION_DRAWS {
                let x = fam.member(&s.hermitian(a.cols())).unwrap();
                checks += 1;
                failures += !(x.is_hermitian() && &a * &x == b) as usize;
            }
        }
        if let Instance::LinearPsd { a, b, .. } = instance(seed, RecipeKind::LinearPsd, MAX_DIM) {
            let fam = PsdFamily::new(&spec_lin(&a, &b)).unwrap();
            for _ in 0..SOLUTION_DRAWS {
                let k = s.integer(1, a.cols() as i64) as usize;
                let x = fam.member(&s.matrix(a.cols(), k)).unwrap();
                checks += 1;
                failures += !(psd_by_minors(&x) && &a * &x == b) as usize;
            }
        }
        if let Instance::Congruence { a, b } = instance(seed, RecipeKind::Congruence, MAX_DIM) {
            let fam = CongruenceFamily::new(&spec_cong(&a, &b)).unwrap();
            for _ in 0..SOLUTION_DRAWS {
                let x = fam.member(&s.matrix(a.cols(), a.cols())).unwrap();
                checks += 1;
                failures += !(x.is_hermitian() && &(&a * &x) * &a.adjoint() == b) as usize;
            }
        }
    }
    let expected = 3 * SOLUTION_INSTANCES * SOLUTION_DRAWS;
    outcome(
        failures == 0 && checks == expected,
        format!("{checks}/{expected} members checked, {failures} failures"),
    )
}

fn envelopes() -> Outcome {
    let cfg = SuiteConfig {
        draws: ENVELOPE_DRAWS,
        ..SuiteConfig::new(SEED, ENVELOPE_INSTANCES, ENVELOPE_MAX_DIM)
    };
    let report = envelope_suite(&cfg, &ProfileKind::ALL).unwrap();
    let mut pass = report.summaries.len() == ProfileKind::ALL.len();
    let mut parts = Vec::new();
    for k in &report.summaries {
        let inst = k.instances as f64;
        let contained = k.contained as f64 / inst;
        let attained = k.max_attained as f64 / inst;
        pass &= k.instances >= ENVELOPE_INSTANCES
            && contained >= ENVELOPE_CONTAINMENT
            && attained >= ENVELOPE_MAX_ATTAINED;
        parts.push(format!(
            "{} {}/{}/{}",
            k.kind.as_str(),
            k.contained,
            k.max_attained,
            k.instances
        ));
    }
    outcome(
        pass,
        format!("contained/max attained/instances: {}", parts.join(", ")),
    )
}

fn cross_check() -> Outcome {
    let mut agree = 0;
    let mut disagreements = Vec::new();
    for t in 0..CROSS_CHECK_INSTANCES {
        let seed = derive_seed(SEED ^ 0x6, t as u64);
        let Instance::LinearHermitian { a, b, p } =
            instance(seed, RecipeKind::LinearHermitian, MAX_DIM)
        else {
            unreachable!()
        };
        let spec = spec_lin(&a, &b);
        let direct: ExtremalProfile = profile_linear_vs_p(&spec, &p).unwrap().profile;
        let via = linear_vs_p_via_completion(&spec, &p).unwrap();
        let Instance::LinearPsd { a, b, p } = instance(seed, RecipeKind::LinearPsd, MAX_DIM) else {
            unreachable!()
        };
        let spec = spec_lin(&a, &b);
        let direct_psd = profile_psd_linear_vs_p(&spec, &p).unwrap().profile;
        let via_psd = psd_linear_vs_p_via_completion(&spec, &p).unwrap();
        if direct == via && direct_psd == via_psd {
            agree += 1;
        } else {
            disagreements.push(seed);
        }
    }
    outcome(
        agree == CROSS_CHECK_INSTANCES,
        format!("{agree}/{CROSS_CHECK_INSTANCES} instance pairs agree on all six fields; disagreeing seeds {disagreements:?}"),
    )
}

fn transformed() -> Outcome {
    let mut all_solve = 0;
    let mut detected = 0;
    for t in 0..TRANSFORMED_INSTANCES {
        let keep = transformed_trial(
            derive_seed(SEED ^ 0x7, t as u64),
            true,
            TRANSFORMED_DRAWS,
            MAX_DIM,
        )
        .unwrap();
        all_solve += (keep.first_violation.is_none() && keep.solving == TRANSFORMED_DRAWS) as usize;
        let drop = transformed_trial(
            derive_seed(SEED ^ 0x17, t as u64),
            false,
            TRANSFORMED_DRAWS,
            MAX_DIM,
        )
        .unwrap();
        detected += drop.first_violation.is_some() as usize;
    }
    let rate = detected as f64 / TRANSFORMED_INSTANCES as f64;
    outcome(
        all_solve == TRANSFORMED_INSTANCES && rate >= TRANSFORMED_DETECTION,
        format!(
            "rank kept: {all_solve}/{TRANSFORMED_INSTANCES} with every member solving; rank dropped: violation found in {detected}/{TRANSFORMED_INSTANCES}"
        ),
    )
}

fn averages() -> Outcome {
    let mut ok = 0;
    for t in 0..AVERAGE_INSTANCES {
        ok += (average_trial(derive_seed(SEED ^ 0x8, t as u64), AVERAGE_DRAWS, MAX_DIM).unwrap()
            == AVERAGE_DRAWS) as usize;
    }
    outcome(
        ok == AVERAGE_INSTANCES,
        format!("{ok}/{AVERAGE_INSTANCES} instances with all {AVERAGE_DRAWS} averages solving"),
    )
}

fn identity_a() -> Outcome {
    let mut zero = 0;
    let mut simplified_zero = 0;
    let mut holds = 0;
    for t in 0..IDENTITY_A_INSTANCES {
        let mut s = Sampler::new(derive_seed(SEED ^ 0x9, t as u64), BOUND).complex(t % 2 == 1);
        let n = s.integer(1, MAX_DIM as i64) as usize;
        let k = s.integer(0, n as i64) as usize;
        let b = s.gram(n, k);
        let spec = spec_cong(&Matrix::identity(n), &b);
        let report = profile_ls_vs_lr(&spec).unwrap();
        zero += (report.profile.fields().iter().all(|f| f.1 == 0)) as usize;
        simplified_zero += (report.simplified.as_ref().map(|p| p.min_rank) == Some(0)) as usize;
        holds += decide_ls_vs_lr(&spec, OrderingQuery::exists(Relation::Succeq))
            .unwrap()
            .holds as usize;
    }
    let n = IDENTITY_A_INSTANCES;
    outcome(
        zero == n && simplified_zero == n && holds == n,
        format!("zero profile {zero}/{n}, simplified minimum 0 {simplified_zero}/{n}, exists succeq {holds}/{n}"),
    )
}

#[derive(Default)]
struct RouteTally {
    decided: usize,
    held: usize,
    disagreements: Vec<String>,
}

impl RouteTally {
    fn record(&mut self, r: hermsol::Result<Verdict>) {
        match r {
            Ok(v) => {
                self.decided += 1;
                self.held += v.holds as usize;
            }
            Err(Error::UnsupportedQuery(_)) => {}
            Err(Error::RouteDisagreement(m)) => self.disagreements.push(m),
            Err(e) => self.disagreements.push(format!("unexpected error: {e}")),
        }
    }
}

/// A transform that keeps the rank of `A` about half of the time.
fn transform(s: &mut Sampler, m: usize) -> Matrix {
    let p = s.integer(1, MAX_DIM as i64) as usize;
    if s.coin(0.5) {
        Matrix::vstack(&[&s.nonsingular(m), &s.any_rank(p - 1, m)]).unwrap()
    } else {
        s.any_rank(p, m)
    }
}

fn route_agreement() -> Outcome {
    let names = [
        "linear-vs-p",
        "psd-vs-p",
        "two-linear",
        "two-congruence",
        "congruence-invariance",
        "transformed",
        "transformed-set",
        "average",
        "row-partition",
        "sum-decomposition",
        "ls-vs-lr",
    ];
    let mut tallies: Vec<RouteTally> = names.iter().map(|_| RouteTally::default()).collect();
    let queries = OrderingQuery::all();
    for t in 0..ROUTE_INSTANCES {
        let seed = derive_seed(SEED ^ 0xa, t as u64);
        let mut s = Sampler::new(derive_seed(seed, 99), BOUND).den_bound(1);
        if let Instance::LinearHermitian { a, b, p } =
            instance(seed, RecipeKind::LinearHermitian, MAX_DIM)
        {
            let spec = spec_lin(&a, &b);
            for q in &queries {
                tallies[0].record(decide_linear_vs_p(&spec, &p, *q));
            }
        }
        if let Instance::LinearPsd { a, b, p } = instance(seed, RecipeKind::LinearPsd, MAX_DIM) {
            let spec = spec_lin(&a, &b);
            for q in &queries {
                tallies[1].record(decide_psd_linear_vs_p(&spec, &p, *q));
            }
        }
        if let Instance::TwoLinear { a, b, c, d } = instance(seed, RecipeKind::TwoLinear, MAX_DIM) {
            let (s1, s2) = (spec_lin(&a, &b), spec_lin(&c, &d));
            for q in &queries {
                tallies[2].record(decide_two_linear(&s1, &s2, *q));
            }
        }
        if let Instance::TwoCongruence { a1, b1, a2, b2 } =
            instance(seed, RecipeKind::TwoCongruence, MAX_DIM)
        {
            let (s1, s2) = (spec_cong(&a1, &b1), spec_cong(&a2, &b2));
            for q in &queries {
                tallies[3].record(decide_two_congruence(&s1, &s2, *q));
            }
            tallies[4].record(decide_two_congruence_invariance(&s1, &s2, Invariance::Rank));
            tallies[4].record(decide_two_congruence_invariance(
                &s1,
                &s2,
                Invariance::Inertia,
            ));
        }
        if let Instance::Congruence { a, b } = instance(seed, RecipeKind::Congruence, MAX_DIM) {
            let spec = spec_cong(&a, &b);
            let m = a.rows();
            let t0 = transform(&mut s, m);
            for q in &queries {
                tallies[5].record(decide_transformed_ordering(&spec, &t0, *q));
            }
            tallies[6].record(decide_transformed_set_equality(&spec, &t0));
            let t1 = transform(&mut s, m);
            tallies[7].record(decide_average_equality(&spec, &t0, &t1));
            let split = s.integer(0, m as i64) as usize;
            tallies[8].record(decide_row_partition_average(&spec, split));
            let a1 = if s.coin(0.3) {
                a.clone()
            } else {
                s.any_rank(a.rows(), a.cols())
            };
            tallies[9].record(decide_sum_decomposition_average(&spec, &a1));
        }
        if let Instance::LsLr { a, b } = instance(seed, RecipeKind::LsLr, MAX_DIM) {
            let spec = spec_cong(&a, &b);
            for q in &queries {
                tallies[10].record(decide_ls_vs_lr(&spec, *q));
            }
        }
    }
    let mut pass = true;
    let mut parts = Vec::new();
    let mut problems = Vec::new();
    for (name, t) in names.iter().zip(&tallies) {
        pass &= t.disagreements.is_empty() && t.decided >= ROUTE_INSTANCES;
        parts.push(format!("{name} {}/{}", t.held, t.decided));
        problems.extend(t.disagreements.iter().take(2).cloned());
    }
    outcome(
        pass,
        format!(
            "holds/decided: {}; disagreements {problems:?}",
            parts.join(", ")
        ),
    )
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run_cli(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hermsol"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn hermsol");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn cli() -> Outcome {
    let dir = fixtures();
    let mut failures = Vec::new();

    let mut files = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if name == "bad_rational.json" || name == "noncanonical.json" {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        files += 1;
        if serialize_matrix(&parse_matrix(&text).unwrap()) != text {
            failures.push(format!("{name} not byte-identical"));
        }
    }

    let goldens: [(&str, &[&str]); 4] = [
        (
            "solve_linear",
            &["solve", "linear", "lin_a.json", "lin_b.json", "--seed", "7"],
        ),
        (
            "solve_unsolvable",
            &["solve", "linear", "unsolv_a.json", "unsolv_b.json"],
        ),
        (
            "order_transformed_exists_succ",
            &[
                "order",
                "transformed",
                "--relation",
                "succ",
                "--mode",
                "exists",
                "cg_a.json",
                "cg_b.json",
                "cg_t.json",
            ],
        ),
        (
            "order_two_linear_forall_equal",
            &[
                "order",
                "two-linear",
                "--relation",
                "equal",
                "--mode",
                "forall",
                "tl_a.json",
                "tl_b.json",
                "tl_c.json",
                "tl_d.json",
            ],
        ),
    ];
    for (name, args) in goldens {
        let (code, stdout) = run_cli(&dir, args);
        let golden = std::fs::read_to_string(dir.join("../golden").join(format!("{name}.out")))
            .unwrap_or_default();
        if format!("exit: {code}\n{stdout}") != golden {
            failures.push(format!("{name} differs from golden"));
        }
    }

    let tmp = tempfile::tempdir().unwrap();
    let fault = [
        "verify",
        "--suite",
        "envelopes",
        "--trials",
        "3",
        "--draws",
        "40",
        "--max-dim",
        "3",
        "--inject-fault",
        "--counterexample-out",
        "cx.json",
    ];
    let table: [(i32, &Path, &[&str]); 6] = [
        (
            0,
            &dir,
            &["solve", "linear", "lin_a.json", "lin_b.json", "--seed", "7"],
        ),
        (
            1,
            &dir,
            &["solve", "linear", "unsolv_a.json", "unsolv_b.json"],
        ),
        (
            2,
            &dir,
            &["solve", "linear", "bad_rational.json", "lin_b.json"],
        ),
        (
            3,
            &dir,
            &[
                "order",
                "transformed",
                "--relation",
                "succ",
                "--mode",
                "exists",
                "cg_a.json",
                "cg_b.json",
                "cg_t.json",
            ],
        ),
        (
            4,
            &dir,
            &[
                "order",
                "two-linear",
                "--relation",
                "equal",
                "--mode",
                "forall",
                "tl_a.json",
                "tl_b.json",
                "tl_c.json",
                "tl_d.json",
            ],
        ),
        (5, tmp.path(), &fault),
    ];
    let mut seen = Vec::new();
    for (expected, cwd, args) in table {
        let (code, _) = run_cli(cwd, args);
        seen.push(code);
        if code != expected {
            failures.push(format!(
                "expected exit {expected}, got {code} for {}",
                args.join(" ")
            ));
        }
    }
    outcome(
        failures.is_empty(),
        format!("{files} canonical files round-trip, 4 goldens, exit codes {seen:?}; failures {failures:?}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("penrose equations for pinv", penrose),
        ("sylvester invariance and scaling law", inertia_laws),
        ("block rank and inertia identities", identities),
        ("solution validity", solution_validity),
        ("envelope containment and attainment", envelopes),
        ("derivation cross-check", cross_check),
        ("transformed equation, both directions", transformed),
        ("averages of transformed solutions", averages),
        ("least-squares vs least-rank with A = I", identity_a),
        ("route agreement", route_agreement),
        ("cli round-trip and exit codes", cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = check();
        failed += !r.pass as usize;
        println!(
            "{} {:>2} {name} [{:.1} s]: {}",
            if r.pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64(),
            r.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
