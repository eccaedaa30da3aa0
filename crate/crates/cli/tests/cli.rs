//! End-to-end tests against the compiled binary: worked examples, exit
//! codes, and output determinism.

use std::process::{Command, Output};

fn clonal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clonal")).args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn eval_reproduces_the_v_multiplication() {
    let out = clonal(&[
        "eval",
        "--instance",
        "symmetric",
        r#"[ "(LL)","[2,1]","(LL)" ] * [ "(L(LL))","[1,2,3]","((LL)L)" ]"#,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[((LL)L),[3,1,2],((LL)L)]\n");
}

#[test]
fn normal_form_collapses_the_trivial_triple() {
    let out = clonal(&["normal-form", "--instance", "trivial", r#"["(LL)","1","(LL)"]"#]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[L,1,L]\n");
}

#[test]
fn check_axioms_signed_exhaustive_passes_with_informational_note() {
    let out = clonal(&["check-axioms", "--instance", "signed", "--max-n", "3", "--mode", "exhaustive"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 7);
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("informational: equality at i = k, k+1 failed"));
}

#[test]
fn check_axioms_json_output_is_deterministic_and_passes() {
    let args =
        ["check-axioms", "--instance", "power:z6", "--max-n", "4", "--seed", "7", "--output", "json"];
    let first = clonal(&args);
    let second = clonal(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid JSON");
    let reports = reports.as_array().expect("array of reports");
    assert_eq!(reports.len(), 7);
    for report in reports {
        assert_eq!(report["pass"], serde_json::Value::Bool(true));
        for key in ["axiom", "ranks", "mode", "samples", "pass"] {
            assert!(report.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn equality_comparison_drives_the_exit_code() {
    let equal = clonal(&[
        "eval",
        "--instance",
        "symmetric",
        r#"[ "(LL)","[2,1]","(LL)" ] * [ "(LL)","[2,1]","(LL)" ] = [ "L","[1]","L" ]"#,
    ]);
    assert!(equal.status.success());
    assert_eq!(stdout(&equal), "true\n");

    let unequal = clonal(&[
        "eval",
        "--instance",
        "symmetric",
        r#"[ "(LL)","[2,1]","(LL)" ] = [ "L","[1]","L" ]"#,
    ]);
    assert_eq!(unequal.status.code(), Some(1));
    assert_eq!(stdout(&unequal), "false\n");
}

#[test]
fn inverse_and_parentheses() {
    let out = clonal(&[
        "eval",
        "--instance",
        "signed",
        r#"inv ( [ "(LL)","[1,-2]","(LL)" ] * [ "(LL)","[2,1]","(LL)" ] ) * ( [ "(LL)","[1,-2]","(LL)" ] * [ "(LL)","[2,1]","(LL)" ] )"#,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[L,[1],L]\n");
}

#[test]
fn project_kills_the_sign_flip() {
    let out = clonal(&["project", "--instance", "signed", r#"[ "(LL)","[1,-2]","(LL)" ]"#]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[L,[1],L]\n");
}

#[test]
fn stein_cubes_on_the_trivial_forests() {
    let out = clonal(&[
        "stein-cubes",
        "--instance",
        "symmetric",
        r#"["(((LL)L)L)","[1,2,3,4]","L|L|L|L"]"#,
        "--dim",
        "2",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[[1,3]]\n");

    let edges = clonal(&[
        "stein-cubes",
        "--instance",
        "symmetric",
        r#"["((LL)L)","[1,2,3]","L|L|L"]"#,
        "--output",
        "json",
    ]);
    assert_eq!(stdout(&edges), "[[1],[2]]\n");
}

#[test]
fn parse_errors_exit_with_code_2() {
    for args in [
        vec!["eval", "--instance", "symmetric", r#"[ "(LX)","[2,1]","(LL)" ]"#],
        vec!["eval", "--instance", "nosuch", r#"[ "L","[1]","L" ]"#],
        vec!["eval", "--instance", "symmetric", r#"[ "(LL)","[2,1]","(L(LL))" ]"#],
        vec!["eval", "--instance", "symmetric", r#"[ "(LL)","[2,1]","(LL)" ] +"#],
        vec!["normal-form", "--instance", "trivial", "not json"],
        vec!["check-axioms", "--instance", "matrix", "--mode", "exhaustive"],
        vec!["stein-cubes", "--instance", "symmetric", r#"["(LL)","[2,1]","L|L|L"]"#],
    ] {
        let out = clonal(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stdout(&out));
    }
}

#[test]
fn instance_mismatch_is_rejected() {
    let out = clonal(&[
        "eval",
        "--instance",
        "symmetric",
        r#"{ "instance": "trivial", "tminus": "L", "g": "1", "tplus": "L" }"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_round_trips_through_eval() {
    let out = clonal(&[
        "eval",
        "--instance",
        "matrix",
        r#"[ "(LL)","[[1,2],[0,1]]","(LL)" ] * [ "(LL)","[[1,1],[0,1]]","(LL)" ]"#,
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let element: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(element["instance"], "matrix");
    assert_eq!(element["tminus"], "(LL)");
    assert_eq!(element["g"][0][1], "3");
    // feeding the object form back in evaluates to the same element
    let back = clonal(&["eval", "--instance", "matrix", &element.to_string()]);
    assert_eq!(stdout(&back), "[(LL),[[1,3],[0,1]],(LL)]\n");
}

#[test]
fn formats_prints_the_reference() {
    let out = clonal(&["formats"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["\"L\" | \"(\" T T \")\"", "power:<base>[:twist]", "Exit codes"] {
        assert!(text.contains(needle), "missing {needle:?}");
    }
}
