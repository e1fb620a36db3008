//! End-to-end checks of the command-line interface: golden outputs, exit
//! codes, JSON round-trips and determinism.

use std::process::{Command, Output};

fn supertwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(args)
        .env_remove("SUPERTWIST_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn char_verma_gl_2_0_golden_text() {
    let out = supertwist(&[
        "char-verma",
        "--algebra",
        "gl2|0",
        "--weight",
        "0,0",
        "--trunc",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "1*e^[0,0]\n1*e^[-1,1]\n1*e^[-2,2]\n1*e^[-3,3]\n"
    );
}

#[test]
fn char_verma_runs_are_byte_identical() {
    let args = [
        "char-verma",
        "--algebra",
        "gl3|2",
        "--weight",
        "1,0,0,-1/2,1/2",
        "--trunc",
        "4",
    ];
    let first = supertwist(&args);
    let second = supertwist(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn char_twist_json_matches_library_closed_form() {
    let out = supertwist(&[
        "char-twist",
        "--algebra",
        "gl2|1",
        "--parabolic",
        "2",
        "--weight",
        "1,1,-1",
        "--word",
        "s1",
        "--trunc",
        "8",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let printed: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();

    let rs = supertwist::roots::RootSystem::gl(2, 1).unwrap();
    let p = rs
        .parabolic(&std::collections::BTreeSet::from([1]))
        .unwrap();
    let w = supertwist::weyl::WeylElement::parse_word(&rs, "s1").unwrap();
    let lam = supertwist::roots::Weight::parse("1,1,-1").unwrap();
    let closed = supertwist::twist::twisted_gvm_char_one_dim(&rs, &p, &w, &lam, 8).unwrap();
    assert_eq!(printed, closed.to_json());

    // and the closed form agrees with the expansion route
    let expansion = supertwist::twist::twisted_char_by_verma_expansion(
        &rs,
        &p,
        &w,
        &supertwist::char_ring::FormalCharacter::exp(&lam),
        8,
    )
    .unwrap();
    assert!(closed.compare_on_window(&expansion).unwrap().agree());

    // the parsed JSON round-trips through the canonical serialization
    let parsed = supertwist::char_ring::FormalCharacter::from_json(&printed).unwrap();
    assert_eq!(parsed, closed);
}

#[test]
fn verify_pug_sweep_exits_zero() {
    let out = supertwist(&["verify", "pug", "--algebra", "gl3|2", "--all"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("pug gl(3|2): PASS"));
}

#[test]
fn verify_theorem_reports_agreement() {
    let out = supertwist(&[
        "verify",
        "theorem",
        "--algebra",
        "gl2|1",
        "--parabolic",
        "2",
        "--weight",
        "1,1,-1",
        "--word",
        "s1",
        "--trunc",
        "8",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["agree"], serde_json::json!(true));
    assert_eq!(v["order"], serde_json::json!(8));
    assert_eq!(v["first_discrepancy"], serde_json::Value::Null);
}

#[test]
fn incompatible_twist_is_a_precondition_error() {
    let out = supertwist(&[
        "char-twist",
        "--algebra",
        "gl3|0",
        "--parabolic",
        "1",
        "--weight",
        "1,1,0",
        "--word",
        "s1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("incompatible_twist"));
}

#[test]
fn bad_usage_exits_one() {
    let out = supertwist(&["char-verma", "--algebra", "gl2|0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("usage"));

    let out = supertwist(&["char-verma", "--algebra", "gl0|0", "--weight", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("empty_algebra"));

    let out = supertwist(&["char-verma", "--algebra", "gl2|0", "--weight", "1,x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("parse_error"));
}

#[test]
fn truncation_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(["char-verma", "--algebra", "gl2|0", "--weight", "0,0"])
        .env("SUPERTWIST_TRUNC", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 3);

    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(["char-verma", "--algebra", "gl2|0", "--weight", "0,0"])
        .env("SUPERTWIST_TRUNC", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn roots_text_golden() {
    let out = supertwist(&["roots", "--algebra", "gl2|1"]);
    assert!(out.status.success());
    let expect = "algebra: gl(2|1)\n\
                  simple: 1:e1-e2 2:e2-d1\n\
                  even+: e1-e2\n\
                  odd+: e1-d1 e2-d1\n\
                  rho0: [1/2,-1/2,0]\n\
                  rho1: [1/2,1/2,-1]\n\
                  rho: [0,-1,1]\n";
    assert_eq!(stdout_of(&out), expect);
}

#[test]
fn roots_json_has_serialized_roots() {
    let out = supertwist(&["roots", "--algebra", "gl1|1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["m"], serde_json::json!(1));
    assert_eq!(
        v["odd_positive"][0],
        serde_json::json!({"plus": 0, "minus": 1, "parity": "odd"})
    );
    assert_eq!(v["rho1"], serde_json::json!(["1/2", "-1/2"]));
}

#[test]
fn weyl_word_output() {
    let out = supertwist(&[
        "weyl",
        "--algebra",
        "gl2|2",
        "--word",
        "s1 t1 s1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v, serde_json::json!({"sigma": [1, 2], "tau": [2, 1]}));

    let out = supertwist(&["weyl", "--algebra", "gl3|0", "--word", "s1 s2 s1"]);
    let text = stdout_of(&out);
    assert!(text.contains("length: 3"));
    assert!(text.contains("inversions: e1-e2 e1-e3 e2-e3"));

    let out = supertwist(&["weyl", "--algebra", "gl2|1", "--word", "s2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("bad_word_token"));
}

#[test]
fn decompose_text_and_json() {
    let out = supertwist(&[
        "decompose",
        "--algebra",
        "gl2|1",
        "--parabolic",
        "1",
        "--weight",
        "0,0,0",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "1 x [0,0,0]\n1 x [0,-1,1]\n1 x [-1,-1,2]\n"
    );

    let out = supertwist(&[
        "decompose",
        "--algebra",
        "gl2|1",
        "--parabolic",
        "1",
        "--weight",
        "0,0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(
        v["summands"][1]["weight"],
        serde_json::json!(["0", "-1", "1"])
    );
    assert_eq!(v["summands"][1]["mult"], serde_json::json!(1));
}

#[test]
fn sweep_command_small_algebra() {
    let out = supertwist(&[
        "sweep",
        "--algebra",
        "gl2|1",
        "--trunc",
        "5",
        "--lambdas",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for name in [
        "twist-1dim",
        "twist-levi",
        "verma-specialization",
        "pug",
        "asp",
        "pig",
        "don",
    ] {
        assert!(
            text.contains(&format!("{name} gl(2|1): PASS")),
            "missing {name}: {text}"
        );
    }
}

#[test]
fn sweep_refuses_large_groups_without_force() {
    let out = supertwist(&["sweep", "--algebra", "gl8|0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("sweep_too_large"));
}

#[test]
fn char_gvm_levi_route() {
    // λ not one-dimensional but dominant for the purely even Levi
    let out = supertwist(&[
        "char-gvm",
        "--algebra",
        "gl3|0",
        "--parabolic",
        "1",
        "--weight",
        "1,0,0",
        "--trunc",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(
        text,
        "1*e^[1,0,0]\n1*e^[1,-1,1]\n1*e^[0,1,0]\n1*e^[1,-2,2]\n2*e^[0,0,1]\n"
    );

    // super Levi with a non-admissible weight is rejected
    let out = supertwist(&[
        "char-gvm",
        "--algebra",
        "gl2|1",
        "--parabolic",
        "2",
        "--weight",
        "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("not_one_dimensional"));
}
