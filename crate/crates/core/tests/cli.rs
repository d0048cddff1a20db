use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn arithnull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arithnull")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn height_at_each_place() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "3*x1 + 7\n");
    let v = json(&arithnull(&["height", &f]));
    assert_eq!(v["place"], "inf");
    assert_eq!(v["exact"], "log(7)");
    assert!((v["value"].as_f64().unwrap() - 7f64.ln()).abs() < 1e-15);
    let v = json(&arithnull(&["height", &f, "--place", "3"]));
    assert_eq!(v["exact"], "0");
    let g = write(dir.path(), "g.txt", "1/4*x1 + 3\n");
    let v = json(&arithnull(&["height", &g, "--place", "2"]));
    assert_eq!(v["exact"], "2*log(2)");
}

#[test]
fn fixture_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let fx = dir.path().join("fx");
    let v = json(&arithnull(&["fixture", "geo", "--n", "2", "--d", "2", "--H", "3", "--dir", fx.to_str().unwrap()]));
    assert_eq!(v["certificate"]["a"], "2");
    let files: Vec<String> = (1..=3).map(|i| fx.join(format!("f{i}.txt")).to_str().unwrap().to_string()).collect();
    let cert = fx.join("cert.json").to_str().unwrap().to_string();
    let mut args = vec!["verify", cert.as_str()];
    args.extend(files.iter().map(String::as_str));
    let v = json(&arithnull(&args));
    assert_eq!(v["identity"], true);
    assert_eq!(v["degree_within_used_bound"], true);

    // a certificate for a different system is rejected with the failure code
    let other = write(dir.path(), "other.txt", "x1 - 2\n");
    let mut args = vec!["verify", cert.as_str(), other.as_str()];
    args.extend(files[1..].iter().map(String::as_str));
    let out = arithnull(&args);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn certify_finds_a_certificate_below_the_cap() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "x1^2 - 2\n");
    let g = write(dir.path(), "g.txt", "x1 - 1\n");
    let v = json(&arithnull(&["certify", &f, &g]));
    // -(x^2 - 2) + (x + 1)(x - 1) = 1
    assert_eq!(v["a"], "1", "{v}");
    assert_eq!(v["g"], serde_json::json!(["-1", "x1 + 1"]));
    assert_eq!(v["degree_bound"], 1);
}

#[test]
fn bound_theorem1_degree() {
    let v = json(&arithnull(&["bound", "theorem1", "--n", "2", "--d", "3"]));
    assert_eq!(v["degree_bound"], 72);
    assert_eq!(v["statement"], "theorem1");
}

#[test]
fn bound_help_lists_every_statement() {
    let out = arithnull(&["bound", "--help"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for (id, _) in arithnull::geometry::STATEMENTS {
        assert!(text.contains(id), "{id} missing from help");
    }
}

#[test]
fn volume_of_the_sparse_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "x1^3 + x1 + 1\n");
    let v = json(&arithnull(&["volume", &f]));
    assert_eq!(v["volume"], 3, "{v}");
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let stdout = arithnull(&["bound", "lemma-n1", "--d", "4", "--h", "log(3)"]);
    let to_file = arithnull(&["bound", "lemma-n1", "--d", "4", "--h", "log(3)", "-o", out.to_str().unwrap()]);
    assert!(to_file.status.success() && to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), stdout.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "x1 +* 2\n");
    assert_eq!(arithnull(&["height", &bad]).status.code(), Some(2));
    assert_eq!(arithnull(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(arithnull(&["bound", "no-such-statement", "--n", "2"]).status.code(), Some(2));
    let a = write(dir.path(), "a.txt", "x1 - 1\n");
    let b = write(dir.path(), "b.txt", "x1^2 - 1\n");
    let out = arithnull(&["certify", &a, &b]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("common zero"));
    assert_eq!(arithnull(&["--version"]).status.code(), Some(0));
}
