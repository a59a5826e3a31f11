use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use sdp::symbolic::{self, parse_word, ConditionForm, Mode};
use sdp::{FiniteGroup, GroupFile};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }

    fn error(&self) -> Value {
        assert_ne!(self.code, 0, "expected failure, stdout: {}", self.stdout);
        let v: Value = serde_json::from_str(self.stderr.trim()).expect("stderr is one JSON object");
        v["error"].clone()
    }

    fn ok(&self) -> Value {
        assert_eq!(self.code, 0, "stderr: {}", self.stderr);
        self.json()
    }
}

fn sdptool(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_sdptool")).args(args).output().expect("runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn group_of(v: &Value) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = serde_json::from_value(v["table"].clone()).unwrap();
    FiniteGroup::from_table(&rows).unwrap()
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort();
    v
}

#[test]
fn validate_group_reports_identity_and_inverses() {
    let v = sdptool(&["validate-group", "--group", &data("s3.json")]).ok();
    assert_eq!(v["order"], 6);
    assert_eq!(v["identity"], 0);
    assert_eq!(v["abelian"], false);
    let e = sdptool(&["validate-group", "--group", &data("not_group.json")]).error();
    assert_eq!(e["kind"], "invalid_group");
}

#[test]
fn file_errors_are_typed() {
    assert_eq!(sdptool(&["validate-group", "--group", &data("broken.json")]).error()["kind"], "json");
    assert_eq!(sdptool(&["validate-group", "--group", &data("missing.json")]).error()["kind"], "io");
}

#[test]
fn usage_errors_are_json() {
    let r = sdptool(&["check-system", "--system", &data("s3_system.json"), "--frobnicate"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.error()["kind"], "usage");
    assert_eq!(sdptool(&["no-such-verb"]).error()["kind"], "usage");
    assert_eq!(sdptool(&["gen-axioms", "--max-k", "3", "--format", "xml"]).error()["kind"], "usage");
}

#[test]
fn check_system_lists_violations() {
    let v = sdptool(&["check-system", "--system", &data("s3_system.json")]).ok();
    assert_eq!(v["normalized"], true);
    assert_eq!(v["order"], 6);
    let v = sdptool(&["check-system", "--system", &data("unnormalized_system.json")]).ok();
    assert_eq!(v["normalized"], false);
    let conds: Vec<&str> =
        v["violations"].as_array().unwrap().iter().map(|x| x["condition"].as_str().unwrap()).collect();
    assert!(conds.contains(&"i") && conds.contains(&"ii"));
}

#[test]
fn build_sdp_trivial_system_is_klein_four() {
    let v = sdptool(&["build-sdp", "--system", &data("klein_system.json")]).ok();
    assert_eq!(v["associative"], true);
    let g = group_of(&v);
    assert!(g.is_abelian());
    assert_eq!(order_profile(&g), [1, 2, 2, 2]);
}

#[test]
fn build_sdp_s3_system_is_isomorphic_to_s3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let v = sdptool(&["build-sdp", "--system", &data("s3_system.json"), "--out", out.to_str().unwrap()]).ok();
    assert_eq!(v["associative"], true);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let g = group_of(&written);
    let s3: GroupFile = serde_json::from_str(&std::fs::read_to_string(data("s3.json")).unwrap()).unwrap();
    let s3 = FiniteGroup::from_file(&s3).unwrap();
    assert!(!g.is_abelian());
    assert_eq!(order_profile(&g), order_profile(&s3));
}

#[test]
fn build_sdp_flags_a_non_associative_table() {
    let v = sdptool(&["build-sdp", "--system", &data("bad_bracket_system.json")]).ok();
    assert_eq!(v["associative"], false);
    assert_eq!(v["order"], 12);
}

#[test]
fn build_sdp_errors() {
    let e = sdptool(&["build-sdp", "--system", &data("unnormalized_system.json")]).error();
    assert_eq!(e["kind"], "not_normalized");
    let e = sdptool(&["build-sdp", "--system", &data("s3_system.json"), "--pair-cap", "4"]).error();
    assert_eq!(e["kind"], "size_cap_exceeded");
}

#[test]
fn table_lists_elements_lexicographically() {
    let v = sdptool(&["table", "--system", &data("s3_system.json")]).ok();
    assert_eq!(v["elements"], serde_json::json!([[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]]));
    assert!(v.get("associative").is_none());
}

#[test]
fn mul_folds_left() {
    let s = data("s3_system.json");
    // (1,0)·(0,1) = (1,1); (1,1)·(0,1) = (1,0).
    let v = sdptool(&["mul", "--system", &s, "--tuple", "[1,0]", "--tuple", "[0,1]"]).ok();
    assert_eq!(v["product"], serde_json::json!([1, 1]));
    // (0,1)·(1,0) = (2,1): the flip inverts the rotation.
    let v = sdptool(&["mul", "--system", &s, "--tuple", "[0,1]", "--tuple", "[1,0]"]).ok();
    assert_eq!(v["product"], serde_json::json!([2, 1]));
    let v = sdptool(&["mul", "--system", &s, "--tuple", "[1,0]", "--tuple", "[0,1]", "--tuple", "[0,1]"]).ok();
    assert_eq!(v["product"], serde_json::json!([1, 0]));
    assert_eq!(sdptool(&["mul", "--system", &s, "--tuple", "[1]"]).error()["kind"], "invalid_argument");
    assert_eq!(sdptool(&["mul", "--system", &s, "--tuple", "[3,0]"]).error()["kind"], "invalid_argument");
}

#[test]
fn check_assoc_reports_the_failing_condition() {
    let s = data("bad_bracket_system.json");
    let v = sdptool(&["check-assoc", "--system", &s, "--brute-force"]).ok();
    assert_eq!(v["holds"], false);
    assert_eq!(v["brute_force"]["holds"], false);
    let failing: Vec<(u64, u64, u64)> = v["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["holds"] == false)
        .map(|c| (c["k"].as_u64().unwrap(), c["j"].as_u64().unwrap(), c["i"].as_u64().unwrap()))
        .collect();
    assert_eq!(failing, [(3, 3, 2)]);
    let v = sdptool(&["check-assoc", "--system", &s, "--condition", "3,3,2"]).ok();
    assert!(v["conditions"][0]["witness"].is_object());
    let v = sdptool(&["check-assoc", "--system", &s, "--component", "3,3,2,2"]).ok();
    assert_eq!(v["holds"], true);
    let v = sdptool(&["check-assoc", "--system", &s, "--component", "3,3,2,1"]).ok();
    assert_eq!(v["holds"], false);
    assert!(v.get("elapsed_ms").is_none());
    let v = sdptool(&["check-assoc", "--system", &s, "--timing"]).ok();
    assert!(v["elapsed_ms"].is_number());
    assert_eq!(sdptool(&["check-assoc", "--system", &s, "--condition", "3,3"]).error()["kind"], "invalid_argument");
    assert_eq!(sdptool(&["check-assoc", "--system", &s, "--condition", "4,3,2"]).error()["kind"], "assoc");
}

#[test]
fn gen_axioms_row_counts() {
    let three = sdptool(&["gen-axioms", "--max-k", "3"]);
    assert_eq!(three.code, 0);
    assert_eq!(three.stdout.lines().count(), 5);
    let five = sdptool(&["gen-axioms", "--max-k", "5"]);
    assert_eq!(five.stdout.lines().count(), 14);
    assert!(five.stdout.lines().next().unwrap().starts_with("A[2,1,1;1]"));
    assert_eq!(sdptool(&["gen-axioms", "--max-k", "1"]).error()["kind"], "invalid_argument");
}

#[test]
fn gen_axioms_all_tags_every_condition() {
    let v = sdptool(&["gen-axioms", "--max-k", "4", "--all", "--format", "structured"]).ok();
    let rows = v["conditions"].as_array().unwrap();
    // One row per k ≥ j ≥ i ≥ l ≥ 1 with 2 ≤ k ≤ 4.
    let expected: usize = (2..=4usize).map(|k| (1..=k).map(|j| (1..=j).sum::<usize>()).sum::<usize>()).sum();
    assert_eq!(rows.len(), expected);
    for r in rows {
        let f = &r["form"];
        assert_eq!(r["class"].is_null(), f["vacuous"] == true, "{}", r["label"]);
    }
}

#[test]
fn structured_output_reparses() {
    let v = sdptool(&["gen-axioms", "--max-k", "5", "--format", "structured"]).ok();
    assert_eq!(v["mode"], "reduced");
    let rows = v["conditions"].as_array().unwrap();
    let reps = symbolic::canonical_representatives(Mode::Reduced, 5);
    assert_eq!(rows.len(), reps.len());
    for (row, rep) in rows.iter().zip(&reps) {
        let form: ConditionForm = serde_json::from_value(row["form"].clone()).unwrap();
        assert_eq!(&form, rep);
        let levels = form.symbol_levels();
        assert_eq!(parse_word(row["lhs"].as_str().unwrap(), levels, form.l).unwrap(), form.lhs);
        assert_eq!(parse_word(row["rhs"].as_str().unwrap(), levels, form.l).unwrap(), form.rhs);
    }
    let lit = sdptool(&["gen-axioms", "--max-k", "4", "--format", "structured", "--literal"]).ok();
    assert_eq!(lit["mode"], "literal");
}

#[test]
fn decompose_s3_and_rebuild() {
    // Elements of s3.json are the permutations of {0,1,2} in lexicographic
    // order; 3 is the 3-cycle (0→1→2) and 1 swaps 1 and 2.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sys.json");
    let v =
        sdptool(&["decompose", "--group", &data("s3.json"), "--factors", "3;1", "--out", out.to_str().unwrap()]).ok();
    assert_eq!(v["report"]["is_sdp"], true);
    assert_eq!(v["factor_orders"], serde_json::json!([3, 2]));
    assert_eq!(
        v["roundtrip"],
        serde_json::json!({"associative": true, "bijective": true, "homomorphism": true, "normalized": true})
    );
    assert!(v.get("system").is_none());
    let checked = sdptool(&["check-system", "--system", out.to_str().unwrap()]).ok();
    assert_eq!(checked["normalized"], true);
    let built = sdptool(&["build-sdp", "--system", out.to_str().unwrap()]).ok();
    assert_eq!(built["associative"], true);
    assert!(!group_of(&built).is_abelian());
}

#[test]
fn decompose_reports_failures() {
    // Two transpositions: the product set has 4 elements.
    let v = sdptool(&["decompose", "--group", &data("s3.json"), "--factors", "1;2"]).ok();
    assert_eq!(v["report"]["is_sdp"], false);
    assert_eq!(v["report"]["failed"]["condition"], "closure");
    assert!(v.get("system").is_none());
    // The order of the factors matters: a transposition is not normal.
    let v = sdptool(&["decompose", "--group", &data("s3.json"), "--factors", "1;3"]).ok();
    assert_eq!(v["report"]["is_sdp"], false);
    assert_eq!(v["report"]["failed"]["condition"], "normality");
    let v = sdptool(&["decompose", "--group", &data("s3.json"), "--factors", "3;1"]).ok();
    assert!(v["system"].is_object());
    let e = sdptool(&["decompose", "--group", &data("s3.json"), "--factors", "3;9"]).error();
    assert_eq!(e["kind"], "invalid_argument");
}

#[test]
fn check_hom_sign_map() {
    let s = data("s3_system.json");
    let v = sdptool(&[
        "check-hom",
        "--system",
        &s,
        "--target",
        &data("z2.json"),
        "--maps",
        &data("sign_maps.json"),
        "--brute-force",
    ])
    .ok();
    assert_eq!(v["holds"], true);
    assert_eq!(v["brute_force"]["holds"], true);
    assert_eq!(v["commutator"]["holds"], true);
}

#[test]
fn check_hom_rejects_a_non_hom() {
    let s = data("s3_system.json");
    let v = sdptool(&[
        "check-hom",
        "--system",
        &s,
        "--target",
        &data("z3.json"),
        "--maps",
        &data("bad_maps.json"),
        "--brute-force",
    ])
    .ok();
    assert_eq!(v["holds"], false);
    assert_eq!(v["brute_force"]["holds"], false);
    assert_eq!(v["commutator"]["holds"], false);
    let failing: Vec<&Value> = v["pairs"].as_array().unwrap().iter().filter(|p| p["holds"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!((failing[0]["k"].as_u64(), failing[0]["j"].as_u64()), (Some(2), Some(1)));
    let e =
        sdptool(&["check-hom", "--system", &s, "--target", &data("z2.json"), "--maps", &data("bad_maps.json")]).error();
    assert_eq!(e["kind"], "hom");
}

#[test]
fn check_hom_into_a_monoid_skips_the_commutator_form() {
    // Z2 → ({0,1}, max): a monoid, not a group.
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("m.json");
    std::fs::write(&target, r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#).unwrap();
    let v = sdptool(&[
        "check-hom",
        "--system",
        &data("s3_system.json"),
        "--target",
        target.to_str().unwrap(),
        "--maps",
        &data("sign_maps.json"),
    ])
    .ok();
    assert!(v["commutator_skipped"].is_string());
    assert!(v.get("commutator").is_none());
}

#[test]
fn experiment_is_byte_identical_on_rerun() {
    let args = ["experiment", "--seed", "42", "--count", "50", "--shape", "2,3,2"];
    let a = sdptool(&args);
    let b = sdptool(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v = a.json();
    assert_eq!(v["agreement"]["both_pass"].as_u64().unwrap() + v["agreement"]["both_fail"].as_u64().unwrap(), 50);
    let h = ["experiment", "--seed", "42", "--count", "30", "--mode", "hom"];
    assert_eq!(sdptool(&h).stdout, sdptool(&h).stdout);
}

#[test]
fn empty_experiment_exits_zero() {
    let v = sdptool(&["experiment", "--seed", "1", "--count", "0"]).ok();
    assert_eq!(v["count"], 0);
    assert_eq!(v["disagreements"], serde_json::json!([]));
}

#[test]
fn experiment_argument_errors() {
    let bad = |args: &[&str]| sdptool(args).error()["kind"].as_str().unwrap().to_string();
    assert_eq!(bad(&["experiment", "--seed", "1", "--count", "1", "--shape", "2,x"]), "invalid_argument");
    assert_eq!(bad(&["experiment", "--seed", "1", "--count", "1", "--p", "1.5"]), "invalid_argument");
    assert_eq!(bad(&["experiment", "--seed", "1", "--count", "1", "--shape", "9,9,9"]), "size_cap_exceeded");
}
