use std::path::{Path, PathBuf};
use std::process::Command;

use hermsol::cli::{exit, Outcome, Report};
use hermsol::io::{parse_matrix, serialize_matrix};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn hermsol(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hermsol"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn hermsol");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Runs `args` in the fixture directory and compares exit code and stdout against
/// `golden/<name>.out`. Set `HERMSOL_BLESS=1` to rewrite the golden files.
fn golden(name: &str, args: &[&str], expected_code: i32) -> String {
    let (code, stdout, stderr) = hermsol(&fixtures(), args);
    assert_eq!(
        code, expected_code,
        "{name}: stdout {stdout} stderr {stderr}"
    );
    let actual = format!("exit: {code}\n{stdout}");
    let path = golden_dir().join(format!("{name}.out"));
    if std::env::var_os("HERMSOL_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "{name} differs from golden");
    stdout
}

#[test]
fn canonical_files_round_trip_byte_for_byte() {
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if name == "bad_rational.json" || name == "noncanonical.json" {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let m = parse_matrix(&text).unwrap();
        assert_eq!(serialize_matrix(&m), text, "{name}");
        assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m);
    }
}

#[test]
fn noncanonical_file_normalizes() {
    let raw = std::fs::read_to_string(fixtures().join("noncanonical.json")).unwrap();
    let canon = std::fs::read_to_string(fixtures().join("noncanonical.canonical.json")).unwrap();
    assert_eq!(serialize_matrix(&parse_matrix(&raw).unwrap()), canon);
}

#[test]
fn solve_linear_text() {
    golden(
        "solve_linear",
        &["solve", "linear", "lin_a.json", "lin_b.json", "--seed", "7"],
        exit::OK,
    );
}

#[test]
fn solve_linear_json_round_trips() {
    let out = golden(
        "solve_linear_json",
        &[
            "--output",
            "json",
            "solve",
            "linear",
            "lin_a.json",
            "lin_b.json",
            "--seed",
            "7",
        ],
        exit::OK,
    );
    let report = Report::from_json(&out).unwrap();
    assert_eq!(report.to_json(), out);
    assert!(matches!(
        report.result,
        Outcome::Certificate { verified: true, .. }
    ));
}

#[test]
fn solve_with_param_file() {
    golden(
        "solve_congruence_param",
        &[
            "solve",
            "congruence",
            "cg_a.json",
            "cg_b.json",
            "--param-file",
            "p_herm.json",
        ],
        exit::OK,
    );
    golden(
        "solve_psd",
        &["solve", "linear-psd", "lin_a.json", "lin_b.json"],
        exit::OK,
    );
}

#[test]
fn solve_unsolvable() {
    let out = golden(
        "solve_unsolvable",
        &["solve", "linear", "unsolv_a.json", "unsolv_b.json"],
        exit::UNSOLVABLE,
    );
    assert!(out.contains("FAILED"));
}

#[test]
fn input_errors() {
    let (code, _, err) = hermsol(
        &fixtures(),
        &["solve", "linear", "bad_rational.json", "lin_b.json"],
    );
    assert_eq!(code, exit::INPUT);
    assert!(err.contains("bad_rational.json"));
    let (code, _, _) = hermsol(
        &fixtures(),
        &[
            "profile",
            "linear-vs-p",
            "cg_a.json",
            "cg_b.json",
            "p_nonherm.json",
        ],
    );
    assert_eq!(code, exit::INPUT);
    assert_eq!(
        hermsol(&fixtures(), &["verify", "--trials", "0"]).0,
        exit::INPUT
    );
    assert_eq!(
        hermsol(
            &fixtures(),
            &["solve", "linear", "missing.json", "lin_b.json"]
        )
        .0,
        exit::INPUT
    );
    assert_eq!(
        hermsol(&fixtures(), &["solve", "linear", "lin_a.json"]).0,
        exit::INPUT
    );
    assert_eq!(
        hermsol(&fixtures(), &["order", "two-linear", "tl_a.json"]).0,
        exit::INPUT
    );
    assert_eq!(hermsol(&fixtures(), &["--help"]).0, exit::OK);
}

#[test]
fn profiles() {
    golden(
        "profile_two_linear",
        &[
            "profile",
            "two-linear",
            "tl_a.json",
            "tl_b.json",
            "tl_c.json",
            "tl_d.json",
        ],
        exit::OK,
    );
    let out = golden(
        "profile_ls_vs_lr",
        &["profile", "ls-vs-lr", "cg_a.json", "cg_b.json"],
        exit::OK,
    );
    assert!(out.contains("(equal)"));
    golden(
        "profile_completion_psd_json",
        &[
            "--output",
            "json",
            "profile",
            "completion-psd",
            "--sign",
            "minus",
            "complex.json",
            "cg_a.json",
        ],
        exit::OK,
    );
}

#[test]
fn order_verdicts() {
    golden(
        "order_ls_vs_lr_exists_succeq",
        &[
            "order",
            "ls-vs-lr",
            "--relation",
            "succeq",
            "--mode",
            "exists",
            "cg_a.json",
            "cg_b.json",
        ],
        exit::OK,
    );
    golden(
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
        exit::FALSE,
    );
    golden(
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
        exit::UNSUPPORTED,
    );
    golden(
        "order_two_linear_exists_succ",
        &[
            "order",
            "two-linear",
            "--relation",
            "succ",
            "--mode",
            "exists",
            "tl_a.json",
            "tl_b.json",
            "tl_c.json",
            "tl_d.json",
        ],
        exit::OK,
    );
}

#[test]
fn verify_passes_and_injected_fault_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--suite",
        "all",
        "--trials",
        "5",
        "--draws",
        "60",
        "--max-dim",
        "3",
        "--seed",
        "1",
    ];
    let (code, out, _) = hermsol(dir.path(), &args);
    assert_eq!(code, exit::OK, "{out}");
    assert!(out.contains("violations: 0"));

    let args = [
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
    let (code, out, _) = hermsol(dir.path(), &args);
    assert_eq!(code, exit::VERIFICATION, "{out}");
    assert!(dir.path().join("cx.json").exists());
    let (code, out, _) = hermsol(dir.path(), &["verify", "--replay", "cx.json"]);
    assert_eq!(code, exit::VERIFICATION, "{out}");
}

#[test]
fn exit_codes_ignore_cwd_and_repeat() {
    let args = [
        "order",
        "transformed",
        "--relation",
        "succ",
        "--mode",
        "exists",
        "cg_a.json",
        "cg_b.json",
        "cg_t.json",
    ];
    let first = hermsol(&fixtures(), &args);
    let second = hermsol(&fixtures(), &args);
    assert_eq!(first, second);
}
