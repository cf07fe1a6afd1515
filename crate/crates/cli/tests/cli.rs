//! End-to-end tests that drive the compiled binary the way a shell user
//! would: real files in, JSON and exit codes out.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn incalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_incalg"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.display().to_string()
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout should be JSON ({e}); got: {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn stderr_text(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process should not be killed")
}

#[test]
fn closure_completes_the_relation() {
    let out = incalg(&["closure", "--poset", &fixture("t2.json")]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["schema"], "incalg/1");
    assert_eq!(report["elements"], serde_json::json!(["1", "2"]));
    // The input file lists only 1 <= 2; reflexive pairs come from the closure.
    assert_eq!(
        report["relations"],
        serde_json::json!([["1", "1"], ["1", "2"], ["2", "2"]])
    );
}

#[test]
fn basis_lists_comparable_pairs() {
    let out = incalg(&["basis", "--poset", &fixture("t2.json")]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["elements"], 2);
    assert_eq!(report["dimension"], 3);
    assert_eq!(
        report["basis"],
        serde_json::json!([["1", "1"], ["1", "2"], ["2", "2"]])
    );
}

#[test]
fn solve_reports_dimensions_and_dumps_the_basis() {
    let dir = tempfile::tempdir().expect("tempdir");
    let dump = dir.path().join("basis.json");
    let dump_arg = dump.display().to_string();

    let out = incalg(&[
        "solve",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--class",
        "der",
        "--dump",
        &dump_arg,
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["class"], "der");
    assert_eq!(report["unknowns"], 9);
    assert_eq!(report["dimension"], 2);

    let dumped: Value =
        serde_json::from_str(&std::fs::read_to_string(&dump).expect("dump file written"))
            .expect("dump is JSON");
    assert_eq!(dumped["dimension"], 2);
    let basis = dumped["basis"].as_array().expect("basis array");
    assert_eq!(basis.len(), 2);
    for entry in basis {
        assert_eq!(entry["ring"], "Q", "single-map dumps are plain map files");
    }

    let out = incalg(&[
        "solve",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--class",
        "gjder",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["unknowns"], 18, "pair classes solve two maps at once");
    assert_eq!(report["dimension"], 5);
}

#[test]
fn solve_requires_a_field() {
    let out = incalg(&[
        "solve",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Z",
        "--class",
        "der",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("not a field"));
}

#[test]
fn check_passes_an_inner_derivation() {
    let out = incalg(&[
        "check",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--class",
        "der",
        "--xi",
        &fixture("inner.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["report"]["witnesses"], serde_json::json!([]));
}

#[test]
fn check_fails_the_corner_map_with_a_witness() {
    let out = incalg(&[
        "check",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--class",
        "der",
        "--xi",
        &fixture("corner.json"),
    ]);
    assert_eq!(exit_code(&out), 1, "a failed check is not an input error");
    let report = stdout_json(&out);
    assert_eq!(report["passed"], false);
    let witness = &report["report"]["witnesses"][0];
    assert_eq!(witness["inputs"], serde_json::json!(["e(1,1)", "e(2,2)"]));
    assert_eq!(witness["left"], "0");
    assert_eq!(witness["right"], "1·e(1,2)");
}

#[test]
fn check_validates_its_argument_combinations() {
    let t2 = fixture("t2.json");
    let inner = fixture("inner.json");
    let zero = fixture("zero.json");

    let out = incalg(&[
        "check", "--poset", &t2, "--ring", "Q", "--class", "der", "--xi", &inner, "--tau", &zero,
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("--tau is not accepted"));

    let out = incalg(&[
        "check", "--poset", &t2, "--ring", "Q", "--class", "gder", "--xi", &inner,
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("pass --tau"));

    let out = incalg(&[
        "check", "--poset", &t2, "--ring", "Q", "--class", "nonsense", "--xi", &inner,
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("unknown check class"));

    // The map file declares ring Q; asking for Z/5 must not silently coerce.
    let out = incalg(&[
        "check", "--poset", &t2, "--ring", "Z/5", "--class", "der", "--xi", &inner,
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("ring mismatch"));
}

#[test]
fn unreadable_and_malformed_inputs_exit_two() {
    let out = incalg(&["closure", "--poset", "/no/such/file.json"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).starts_with("error:"));

    let mut bad = tempfile::NamedTempFile::new().expect("tempfile");
    bad.write_all(b"{ this is not json").expect("write");
    let bad_arg = bad.path().display().to_string();
    let out = incalg(&["basis", "--poset", &bad_arg]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("invalid JSON"));
}

#[test]
fn decompose_certifies_a_derivation_pair() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cert_path = dir.path().join("cert.json");
    let cert_arg = cert_path.display().to_string();

    let out = incalg(&[
        "decompose",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--xi",
        &fixture("inner.json"),
        "--tau",
        &fixture("inner.json"),
        "--out",
        &cert_arg,
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty(), "--out diverts the report");

    let cert: Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).expect("certificate written"))
            .expect("certificate is JSON");
    assert_eq!(cert["schema"], "incalg/1");
    assert_eq!(cert["verdict"], true);
    assert_eq!(
        cert["residual"]["images"],
        serde_json::json!([]),
        "xi minus the assembled map must vanish identically"
    );
    for check in cert["checks"].as_array().expect("checks array") {
        assert_eq!(check["passed"], true, "check {}", check["identity"]);
    }
    assert_eq!(cert["component_relations"]["passed"], true);
}

#[test]
fn decompose_rejects_a_pair_outside_the_hypotheses() {
    let out = incalg(&[
        "decompose",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
        "--xi",
        &fixture("corner.json"),
        "--tau",
        &fixture("zero.json"),
    ]);
    assert_eq!(exit_code(&out), 2, "hypothesis violations are input errors");
    assert!(stderr_text(&out).contains("generalized Jordan derivation pair"));
}

#[test]
fn verify_theorem_on_a_single_poset() {
    let out = incalg(&[
        "verify-theorem",
        "--poset",
        &fixture("t2.json"),
        "--ring",
        "Q",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 0);
    assert_eq!(report["samples"], 10);
    let case = &report["cases"][0];
    assert_eq!(case["dimensions"]["generalized_jordan_pair_dim"], 5);
    assert_eq!(case["certificates"], 15, "5 basis members plus 10 samples");
    assert_eq!(case["all_verdicts_true"], true);
}

#[test]
fn verify_theorem_rejects_unusable_rings() {
    let t2 = fixture("t2.json");
    let out = incalg(&["verify-theorem", "--poset", &t2, "--ring", "Z/6"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("not a field"));

    let out = incalg(&["verify-theorem", "--poset", &t2, "--ring", "Z/2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_text(&out).contains("torsion-search"),
        "the 2-torsion refusal should point at the observational command"
    );
}

#[test]
fn torsion_search_reports_observations() {
    let out = incalg(&["torsion-search", "--poset", &fixture("t2.json")]);
    assert_eq!(exit_code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["ring"], "Z/2");
    let case = &report["cases"][0];
    assert_eq!(case["jordan_gap"], 0);
    assert_eq!(
        case["jordan_basis_maps_failing_product_rule"],
        serde_json::json!([])
    );
}

#[test]
fn sweep_size_is_validated() {
    let out = incalg(&["torsion-search", "--all-posets-up-to", "9"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_text(&out).contains("between 1 and 4"));
}

#[test]
fn sweep_target_flags_are_mutually_exclusive() {
    let out = incalg(&[
        "verify-theorem",
        "--poset",
        &fixture("t2.json"),
        "--all-posets-up-to",
        "2",
        "--ring",
        "Q",
    ]);
    assert_eq!(exit_code(&out), 2, "clap rejects conflicting target flags");
}

#[test]
fn seeded_sweeps_are_byte_identical() {
    let args = [
        "verify-theorem",
        "--all-posets-up-to",
        "2",
        "--ring",
        "Z/3",
        "--samples",
        "4",
        "--seed",
        "7",
    ];
    let first = incalg(&args);
    let second = incalg(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}
