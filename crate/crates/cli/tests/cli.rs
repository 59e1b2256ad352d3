use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use cocart::fixtures;
use cocart_cli::{parse_bundle, serialize_bundle, Bundle};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.bundle"))
}

fn cocart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocart")).args(args).output().unwrap()
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--report", "machine"];
    all.extend_from_slice(args);
    let out = cocart(&all);
    let json =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), json)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_all_on_a_cocartesian_bundle() {
    let (code, r) = machine(&["check", path(&fixture("join")), "--condition", "all"]);
    assert_eq!(code, 0);
    let verdicts = r["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 5);
    assert!(verdicts.iter().all(|v| v["holds"] == true));
    assert_eq!(r["agreement"], true);
    assert_eq!(r["witnesses_replayed"], true);
}

#[test]
fn check_all_on_a_group_fails_everywhere_with_reasons() {
    let (code, r) = machine(&["check", path(&fixture("z2"))]);
    assert_eq!(code, 0);
    for v in r["verdicts"].as_array().unwrap() {
        assert_eq!(v["holds"], false);
        assert!(!v["witness"]["kind"].as_str().unwrap().is_empty());
    }
    assert_eq!(r["agreement"], true);
}

#[test]
fn missing_symmetry_is_a_structured_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut b = Bundle::from_fixture(&fixtures::join());
    b.symmetry = None;
    let p = write(dir.path(), "nosym.bundle", &serialize_bundle(&b));
    let (code, r) = machine(&["check", path(&p), "--condition", "b"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "missing-structure");
    let out = cocart(&["check", path(&p), "--condition", "b"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("symmetry"));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "bad.bundle",
        "category:\n  object: A\n  morphism: f : A -> B\n",
    );
    let (code, r) = machine(&["validate", path(&p)]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "resolve");
    let message = r["error"]["message"].as_str().unwrap();
    assert!(message.ends_with("bad.bundle:3:22: unknown object `B`"), "{message}");

    let p = write(dir.path(), "junk.bundle", "category:\n  object A\n");
    let (code, r) = machine(&["validate", path(&p)]);
    assert_eq!((code, r["error"]["kind"].as_str()), (1, Some("parse")));
}

#[test]
fn law_violations_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    // (e∘e)∘e = f∘e = e but e∘(e∘e) = e∘f = 1
    let text = "category:\n  object: A\n  morphism: 1 : A -> A\n  morphism: e : A -> A\n  morphism: f : A -> A\n  \
                identity: A = 1\n  compose: [e, e] = f\n  compose: [e, f] = 1\n  compose: [f, e] = e\n  \
                compose: [f, f] = f\n";
    let p = write(dir.path(), "law.bundle", text);
    let (code, r) = machine(&["validate", path(&p)]);
    assert_eq!((code, r["error"]["kind"].as_str()), (1, Some("law")));
    let (code, _) = machine(&["validate", path(&fixture("double-unit"))]);
    assert_eq!(code, 0);
}

#[test]
fn synthesize_writes_a_reloadable_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.bundle");
    let (code, r) = machine(&["synthesize", path(&fixture("double-unit")), "-o", path(&out)]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["confirmed"], r["details"]["pairs"]);
    let back = parse_bundle(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(back, Bundle::from_fixture(&fixtures::double_unit()));
}

#[test]
fn synthesize_with_karoubi_completes_first() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.bundle");
    let (code, r) = machine(&[
        "synthesize",
        path(&fixture("walking-idempotent-tensor")),
        "--karoubi",
        "-o",
        path(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["unsplit_idempotents"], 0);
    assert_eq!(r["details"]["magma"], "none");
    let back = parse_bundle(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(back.cat.n_objects(), 2);
    assert!(back.magmal.is_some());
}

#[test]
fn synthesize_without_a_magma_says_so() {
    let out = cocart(&["synthesize", path(&fixture("meet"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("no magma structure exists"));
}

#[test]
fn karoubi_of_a_bare_category() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.bundle");
    let (code, r) = machine(&["karoubi", path(&fixture("walking-idempotent")), "-o", path(&out)]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["objects"], 2);
    let (code, _) = machine(&["validate", path(&out)]);
    assert_eq!(code, 0);
}

#[test]
fn tiny_limits_exit_with_two() {
    let (code, r) = machine(&[
        "--limit",
        "1",
        "check",
        path(&fixture("double-unit")),
        "--condition",
        "e",
    ]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("size-limit")));
    let (code, r) = machine(&["--limit", "1", "check", path(&fixture("double-unit"))]);
    assert_eq!(code, 2);
    assert_eq!(r["limits_hit"].as_array().unwrap().len(), 1);
}

#[test]
fn egger_demo_finds_the_failing_element() {
    let (code, r) = machine(&["demo", "egger", "--size-a", "2", "--size-b", "1", "--probe-bound", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["witness"]["element"], "mid(a0,b0)");
    assert_eq!(r["details"]["witness"]["image"], "inl a0");
    assert_eq!(r["details"]["summand_size"], 3);
    assert_eq!(r["details"]["coproduct_verified"], true);
    let out = cocart(&["demo", "egger", "--size-a", "1", "--size-b", "1", "--probe-bound", "2"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("mid(a0,b0) ↦ inl a0"), "{text}");
    assert!(
        text.contains("carrier of size 2: 8 monoids for ⊗, 8 semigroups"),
        "{text}"
    );
}

#[test]
fn bad_arguments_are_usage_errors() {
    let out = cocart(&["check", path(&fixture("join")), "--condition", "f"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown condition"));
}
