use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn katlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_katlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_domain_on_a3_fails_locality() {
    let a3 = fixture("a3.fka");
    let out = katlab(&["check", "--suite", "domain", a3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("d:locality        FAILS  x=2, y=2 [lhs 0, rhs 1]"));
}

#[test]
fn check_kleene_on_a3_holds() {
    let out = katlab(&["check", "--suite", "kleene", fixture("a3.fka").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_json_is_machine_readable() {
    let out = katlab(&["check", "--suite", "domain", "--json", fixture("a3.fka").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "domain");
    let failing: Vec<_> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["holds"] == false)
        .collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["axiom"], "d:locality");
}

#[test]
fn missing_table_is_an_error() {
    let out = katlab(&["check", "--suite", "kat1", fixture("a3-no-t.fka").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing table t"));
}

#[test]
fn unreadable_file_is_an_error() {
    let out = katlab(&["check", "--suite", "kleene", "/nonexistent.fka"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_prints_certificate() {
    let out = katlab(&["search", "--suite", "kad", "--tables", "a", fixture("a3.fka").to_str().unwrap()]);
    assert_eq!(stdout(&out), "NO EXPANSION EXISTS (exhaustive: 27 candidates)\n");
    assert_eq!(out.status.code(), Some(1));
    let out = katlab(&["search", "--suite", "kat1", "--tables", "t,t'", fixture("a3.fka").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("t = 0 1 1; t' = 1 0 2"));
}

#[test]
fn translate_command() {
    let out = katlab(&["translate", "p0 ; b1*"]);
    assert_eq!(stdout(&out), "x0 ; t(x3)*\n");
    assert_eq!(katlab(&["translate", "p0 ;"]).status.code(), Some(2));
}

#[test]
fn holds_command() {
    let a3 = fixture("a3.fka");
    let a3 = a3.to_str().unwrap();
    let out = katlab(&["holds", a3, "x0 ; x0 ; x0 = x0 ; x0"]);
    assert_eq!(out.status.code(), Some(0));
    let out = katlab(&["holds", a3, "t(x0 ; x1) = t(x0 ; t(x1))"]);
    assert_eq!(out.status.code(), Some(2), "a3 has no t table");
    let out = katlab(&["holds", a3, "x0 = 0", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_then_check() {
    let dir = std::env::temp_dir().join(format!("katlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_file = dir.join("a3-kat1.fka");
    let out = katlab(&["expand", "--to", "kat1", fixture("a3.fka").to_str().unwrap(), "-o", out_file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let check = katlab(&["check", "--suite", "kat1", out_file.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    // the original d table is kept alongside the new ones
    let check = katlab(&["check", "--suite", "predomain", out_file.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    let out = katlab(&["expand", "--to", "residuated", fixture("a4.fka").to_str().unwrap()]);
    assert!(stdout(&out).contains("binary arrow"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn appendix_verify_command() {
    let out = katlab(&["appendix-verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("A3: KA ✓ predomain ✓ locality ✗ (x=2,y=2) KAD-expansion: none (27/27)\n"));
    assert!(text.contains("A4: KA ✓ predomain ✓\n"));
    assert!(text.contains("\"is not closed under ·\": diverge"));
    let json = katlab(&["appendix-verify", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["a4"]["closure"]["claim_true"], false);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = katlab(&["appendix-verify"]);
    let b = katlab(&["appendix-verify"]);
    assert_eq!(a.stdout, b.stdout);
}
