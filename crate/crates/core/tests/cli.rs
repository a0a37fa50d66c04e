use std::path::PathBuf;
use std::process::Command;

use curcoh::verify::VerificationReport;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn curcoh(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_curcoh")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

#[test]
fn verify_sl2_adjoint_tp2_matches() {
    let (code, out, _) = curcoh(&["verify", "--theorem", "T2_1", "--lie", "sl2", "--module", "adjoint", "--assoc", "tp2", "--coeff", "regular"]);
    assert_eq!(code, 0);
    assert!(out.contains("match: true"));
}

#[test]
fn whitehead_vanishing() {
    let (code, out, _) = curcoh(&["--format", "json", "cohomology", "--degree", "2", "--lie", "sl2", "--module", "adjoint"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 0);
    assert_eq!(v["schema"], 1);
}

#[test]
fn broken_algebra_lists_jacobi_violation() {
    let (code, out, _) = curcoh(&["validate", &data("broken.alg")]);
    assert_eq!(code, 1);
    assert!(out.contains("Jacobi"), "{out}");
}

#[test]
fn parse_errors_exit_one_with_location() {
    let dir = std::env::temp_dir().join(format!("curcoh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"name\": \"x\",\n  \"kind\": \"lie\",\n  \"dim\": 1,\n  \"basis\": [\"a\"],\n  \"products\": [[0, 0, 0, \"one\"]]\n}\n").unwrap();
    let (code, _, err) = curcoh(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("products[0]"), "{err}");
    std::fs::write(&bad, "{\n  \"name\": \"x\",\n  \"kind\": \n").unwrap();
    let (code, _, err) = curcoh(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 4"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn mismatch_exits_two() {
    let (code, out, _) = curcoh(&["verify", "--theorem", "P3_1", "--lie", "ab2", "--module", "trivial(1)", "--assoc", "circ2"]);
    assert_eq!(code, 2);
    assert!(out.contains("match: false"));
}

#[test]
fn unknown_names_exit_one() {
    assert_eq!(curcoh(&["verify", "--theorem", "T9_9", "--lie", "sl2"]).0, 1);
    assert_eq!(curcoh(&["cohomology", "--degree", "1", "--lie", "so5"]).0, 1);
    assert_eq!(curcoh(&["spencer", "--type", "B", "--rank", "2", "--beta", "1"]).0, 1);
}

#[test]
fn json_report_round_trips_and_summands_add_up() {
    for theorem in ["T2_1", "C2_2", "P3_1", "P3_5", "T3_7", "P3_8_with_prime", "P3_9", "LEMMA3_2", "LEMMA3_3", "LEMMA3_6"] {
        let (lie, module) = if theorem == "T3_7" || theorem == "P3_5" { ("ab2", "trivial(1)") } else { ("heis3", "adjoint") };
        let (code, out, err) = curcoh(&["--format", "json", "verify", "--theorem", theorem, "--lie", lie, "--module", module, "--assoc", "tp2"]);
        assert!(code == 0 || code == 2, "{theorem}: {err}");
        let r: VerificationReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.schema, 1);
        assert_eq!(r.summand_dims.iter().map(|s| s.dim).sum::<usize>(), r.formula_dim, "{theorem}");
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);
    }
}

#[test]
fn files_and_catalog_names_agree() {
    let by_name = curcoh(&["--format", "json", "verify", "--theorem", "T2_1", "--lie", "sl2", "--module", "adjoint", "--assoc", "tp2"]);
    let by_file = curcoh(&["--format", "json", "verify", "--theorem", "T2_1", "--module", &data("sl2_adjoint.json"), "--assoc", &data("tp2.json")]);
    let a: VerificationReport = serde_json::from_str(&by_name.1).unwrap();
    let b: VerificationReport = serde_json::from_str(&by_file.1).unwrap();
    assert_eq!((a.direct_dim, a.formula_dim, a.matched), (b.direct_dim, b.formula_dim, b.matched));
    assert_eq!(a.summand_dims, b.summand_dims);
    let by_lie_file = curcoh(&["--format", "json", "verify", "--theorem", "T2_1", "--lie", &data("sl2.json"), "--module", "adjoint", "--assoc", "tp2"]);
    assert_eq!(by_lie_file.0, 0, "{}", by_lie_file.2);
    let c: VerificationReport = serde_json::from_str(&by_lie_file.1).unwrap();
    assert_eq!(a.summand_dims, c.summand_dims);
}

#[test]
fn prolongation_commands() {
    let (code, out, _) = curcoh(&["--format", "json", "prolong", "--gl", "2", "--max-degree", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"][2][1], 6);
    let (code, out, _) = curcoh(&["prolong", "--rank", "3", "--beta", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("g_1: dim 4"));
    let (code, out, _) = curcoh(&["spencer", "--root-datum", &data("a3.json"), "--beta", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("match: true"));
    let (code, out, _) = curcoh(&["spencer", "--gl", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("SH^{1,2}: dim 0") && out.contains("Ker T: dim 9"));
}

#[test]
fn catalog_list_and_subspace() {
    let (code, out, _) = curcoh(&["catalog-list"]);
    assert_eq!(code, 0);
    assert!(out.contains("heis3"));
    let (code, out, _) = curcoh(&["--format", "json", "subspace", "--name", "P_plus", "--assoc", "tp3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["dim"].as_u64().is_some());
    assert_eq!(curcoh(&["subspace", "--name", "nothing"]).0, 1);
}

#[test]
fn identical_requests_give_identical_output() {
    let args = ["--format", "json", "verify", "--theorem", "P3_9", "--lie", "sl2", "--module", "adjoint", "--assoc", "circ2"];
    assert_eq!(curcoh(&args).1, curcoh(&args).1);
}
