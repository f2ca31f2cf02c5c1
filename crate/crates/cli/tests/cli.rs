//! End-to-end tests against the built binary: certificate round trips in a
//! fresh process, byte-stable output, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn conelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn conelab_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_conelab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn separator_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("separator.json");
    let out = conelab(&[
        "bs",
        "separate",
        "--n",
        "2",
        "--alpha",
        "sqrt(2)",
        "--beta",
        "sqrt(3)",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let verify = conelab(&["verify", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout_str(&verify).contains("\"verdict\":\"pass\""));
}

#[test]
fn every_certificate_kind_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let produce: Vec<(&str, Vec<&str>)> = vec![
        ("separator", vec!["bs", "separate", "--alpha", "sqrt(2)", "--beta", "(1+1*sqrt(2))/1"]),
        ("freepart", vec!["bs", "freepart", "--alpha", "sqrt(2)", "--word", "ab"]),
        ("condense-bs", vec!["bs", "condense", "--alpha", "sqrt(2)", "--radius", "2"]),
        ("goodfn", vec!["f", "goodfn", "--fix", "1/3", "--raise", "1/2", "--lower", "3/4"]),
        ("fsep", vec!["f", "separate", "--word", "abA"]),
        (
            "condense-hinf",
            vec!["hinf", "condense", "--prefix", "1,0", "--tail", "1", "--radius", "3"],
        ),
    ];
    for (name, args) in produce {
        let path = dir.path().join(format!("{name}.json"));
        let mut full = args.clone();
        full.push("--out");
        full.push(path.to_str().unwrap());
        let out = conelab(&full);
        assert!(
            out.status.success(),
            "{name} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let verify = conelab(&["verify", path.to_str().unwrap()]);
        assert_eq!(verify.status.code(), Some(0), "{name} did not verify");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["bs", "separate", "--n", "3", "--alpha", "sqrt(2)", "--beta", "sqrt(3)"];
    let first = conelab(&args);
    let second = conelab(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn tampered_certificate_fails_with_exit_one() {
    let out = conelab(&["bs", "separate", "--alpha", "sqrt(2)", "--beta", "sqrt(3)"]);
    let text = stdout_str(&out);
    // flip a recorded sign in the transcript
    let tampered = text.replace("\"rel\":\">\",\"rhs\":\"0\"", "\"rel\":\"<\",\"rhs\":\"0\"");
    assert_ne!(text, tampered);
    let verify = conelab_stdin(&["verify", "-"], &tampered);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stdout_str(&verify).contains("\"verdict\":\"fail\""));
}

#[test]
fn perturbed_breakpoint_fails_verification() {
    let out = conelab(&["f", "goodfn", "--fix", "1/3", "--raise", "1/2", "--lower", "3/4"]);
    let text = stdout_str(&out);
    // the upward bump maps 15/32 somewhere; nudge one breakpoint image
    let tampered = text.replacen("\"1/2\"],", "\"17/32\"],", 1);
    assert_ne!(text, tampered);
    let verify = conelab_stdin(&["verify", "-"], &tampered);
    assert_ne!(verify.status.code(), Some(0));
}

#[test]
fn invalid_input_exits_three() {
    // rational alpha rejected for smirnov cones
    let out = conelab(&["bs", "sign", "--alpha", "2/3", "--word", "a"]);
    assert_eq!(out.status.code(), Some(3));
    // unparsable certificate document
    let verify = conelab_stdin(&["verify", "-"], "{\"kind\":\"nonsense\"}");
    assert_eq!(verify.status.code(), Some(3));
    // identity word where a nonidentity element is required
    let out = conelab(&["f", "separate", "--word", "aA"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = conelab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sign_queries() {
    let out = conelab(&["bs", "sign", "--n", "2", "--alpha", "sqrt(2)", "--word", "b"]);
    assert!(stdout_str(&out).contains("\"sign\":\"pos\""));
    let out = conelab(&["f", "sign", "--word", "a"]);
    let text = stdout_str(&out);
    assert!(text.contains("\"sign\":\"neg\""));
    assert!(text.contains("\"decided_at_index\":0"));
    let out = conelab(&["hinf", "sign", "--word", "2,-1", "--prefix", "1,0", "--tail", "1"]);
    assert!(stdout_str(&out).contains("\"sign\":\"neg\""));
}

#[test]
fn hinf_product_and_conjugation() {
    let out = conelab(&["hinf", "mul", "--lhs", "2", "--rhs", "1"]);
    assert!(stdout_str(&out).contains("\"exponents\":[-1,1]"));
    let out = conelab(&["hinf", "conj", "--word", "3", "--prefix", "1,1", "--tail", "1"]);
    let text = stdout_str(&out);
    assert!(text.contains("\"flipped_positions\":[2]"), "got {text}");
}

#[test]
fn e0check_explicit_and_random() {
    let out = conelab(&[
        "hinf", "e0check", "--word", "3,-2,3", "--prefix", "1,0,1", "--tail", "0",
        "--max-gen", "4", "--radius", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"pass\":true"));
    let out = conelab(&["hinf", "e0check", "--seed", "7", "--trials", "5", "--radius", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ball_build_and_axiom_check() {
    let out = conelab(&["ball", "build", "--group", "bs", "--n", "2", "--radius", "2"]);
    let text = stdout_str(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["elements"].as_array().unwrap().len(), 17);

    let out = conelab(&[
        "ball", "check-axioms", "--group", "bs", "--alpha", "sqrt(2)", "--radius", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("\"pass\":true"));

    let out = conelab(&[
        "ball", "check-axioms", "--group", "hinf", "--prefix", "1,0", "--tail", "0",
        "--radius", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn radius_cap_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_conelab"))
        .args(["ball", "build", "--group", "f", "--radius", "9"])
        .env("CONELAB_MAX_RADIUS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn oversized_ball_in_certificate_rejected() {
    // a ball-region certificate whose document claims an absurd radius must
    // be rejected at parse time, not rebuilt
    let out = conelab(&["bs", "condense", "--alpha", "sqrt(2)", "--radius", "2"]);
    let text = stdout_str(&out);
    let tampered = text.replace("\"radius\":2", "\"radius\":4000000000");
    assert_ne!(text, tampered);
    let verify = conelab_stdin(&["verify", "-"], &tampered);
    assert_eq!(verify.status.code(), Some(3));
}

#[test]
fn golden_separator_document() {
    let out = conelab(&["bs", "separate", "--n", "2", "--alpha", "sqrt(2)", "--beta", "sqrt(3)"]);
    let expected = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/separator_sqrt2_sqrt3.json"),
    )
    .unwrap();
    assert_eq!(stdout_str(&out), expected);
}

#[test]
fn pretty_adds_table_after_json() {
    let out = conelab(&["f", "relcheck", "--pretty"]);
    let text = stdout_str(&out);
    assert!(text.starts_with("{\"relators\""));
    assert!(text.contains("pass: true"));
}
