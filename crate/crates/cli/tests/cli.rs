use std::path::PathBuf;
use std::process::{Command, Output};

fn kantor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kantor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kantor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn catalog_lists_items() {
    let o = kantor(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().any(|l| l.starts_with("osp12") && l.contains("dim 5")));
    assert!(s.lines().any(|l| l.starts_with("quat ") && l.contains("dim 4")));
    let o = kantor(&["catalog", "--self-test"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_exit_codes() {
    let o = kantor(&["verify", "quat", "--suite", "kantor"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: pass"));

    let o = kantor(&["verify", "scalar-fkts", "--suite", "fkts:+1,-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness at [0, 0, 0, 0, 0]"));

    let bad = scratch("corrupt.json");
    std::fs::write(
        &bad,
        "{\"format\": \"kantor-sc/1\", \"kind\": \"triple-system\", \"dim\": ",
    )
    .unwrap();
    let o = kantor(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = kantor(&["verify", "quat", "--suite", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_across_jobs() {
    let a = kantor(&[
        "--jobs",
        "1",
        "verify",
        "mat2-transpose",
        "--suite",
        "gjts",
        "--suite",
        "fkts:1,1",
    ]);
    let b = kantor(&[
        "--jobs",
        "4",
        "verify",
        "mat2-transpose",
        "--suite",
        "gjts",
        "--suite",
        "fkts:1,1",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let r = kantor(&["report", "scalar-fkts", "--suite", "fkts:1,-1"]);
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).contains("\"witness\""));
}

#[test]
fn convert_roundtrip_through_files() {
    let quat = scratch("quat.json");
    let kts = scratch("quat-kts.json");
    let back = scratch("quat-back.json");
    assert!(kantor(&["catalog", "quat"]).status.success());
    std::fs::write(&quat, kantor(&["catalog", "quat"]).stdout).unwrap();
    let o = kantor(&[
        "convert",
        quat.to_str().unwrap(),
        "structurable-to-kts",
        "--out",
        kts.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = kantor(&["verify", kts.to_str().unwrap(), "--suite", "fkts:-1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = kantor(&[
        "convert",
        kts.to_str().unwrap(),
        "kts-to-structurable",
        "--unit",
        "1,0,0,0",
        "--out",
        back.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&back).unwrap();
    let original = std::fs::read_to_string(&quat).unwrap();
    let records = |t: &str| t[t.find("\"records\"").unwrap()..].to_string();
    assert_eq!(records(&text), records(&original));

    let o = kantor(&["convert", "unit-field", "double-m21"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"signs\": \"1,1\""));
    assert!(stdout(&o).contains("\"dim\": 2"));

    let o = kantor(&["convert", "quat-kts", "twist"]);
    assert_eq!(o.status.code(), Some(1));
    let o = kantor(&["convert", "quat-kts", "twist", "--map", "quat-conj-i"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn build_lie_and_decompose() {
    let o = kantor(&["build-lie", "scalar-fkts"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"dim\": 5"));
    let o = kantor(&["build-lie", "unit-field", "--signs", "-1,1"]);
    assert!(stdout(&o).contains("\"dim\": 3"));
    let o = kantor(&["decompose", "swap-fkts"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("adjoint×2, natural×0, trivial dim 0\n"));
}
