use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn adjoints(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjoints"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("adjoints-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn build(dir: &Path, file: &str, args: &[&str]) -> String {
    let out = dir.join(file);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", out.to_str().unwrap()]);
    let o = adjoints(&full);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    out.to_str().unwrap().to_owned()
}

#[test]
fn chi_of_interleaved_tournament() {
    let dir = scratch("chi");
    let t6 = build(&dir, "t6.json", &["--family", "tournament", "--n", "6"]);
    let iota = build(
        &dir,
        "iota2_T6.json",
        &["--family", "iota", "--input", &t6, "--k", "2"],
    );
    let o = adjoints(&["chi", "--input", &iota]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn path_family_strings() {
    let o = adjoints(&[
        "construct",
        "--family",
        "path-family",
        "--n",
        "6",
        "--k",
        "1",
        "--format",
        "dot",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "++++++");
    let o = adjoints(&[
        "construct",
        "--family",
        "path-family",
        "--n",
        "6",
        "--k",
        "1",
    ]);
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, lines);
}

#[test]
fn hom_none_exits_zero() {
    let dir = scratch("hom");
    let p2 = build(&dir, "p2.json", &["--family", "path", "--n", "2"]);
    let t2 = build(&dir, "t2.json", &["--family", "tournament", "--n", "2"]);
    let o = adjoints(&["hom", "--source", &p2, "--target", &t2]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "NONE");
    let o = adjoints(&["--json", "hom", "--source", &t2, "--target", &p2]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "found");
}

#[test]
fn budget_exhaustion_exits_two() {
    let dir = scratch("budget");
    let k5 = build(&dir, "k5.json", &["--family", "complete", "--n", "5"]);
    let k4 = build(&dir, "k4.json", &["--family", "complete", "--n", "4"]);
    let o = adjoints(&["hom", "--source", &k5, "--target", &k4, "--budget", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = adjoints(&["find-steep-path", "--ell", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(adjoints(&["bogus"]).status.code(), Some(3));
    assert_eq!(
        adjoints(&["chi", "--input", "x.json", "--frobnicate"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        adjoints(&["chi", "--input", "/nonexistent/x.json"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        adjoints(&["verify", "--claim", "minty"]).status.code(),
        Some(3)
    );
    assert_eq!(adjoints(&["--help"]).status.code(), Some(0));
}

#[test]
fn dot_export() {
    let o = adjoints(&[
        "construct",
        "--family",
        "complete",
        "--n",
        "2",
        "--format",
        "dot",
        "--collapse-symmetric",
    ]);
    let text = stdout(&o);
    assert!(text.contains("0 -> 1 [dir=none]"));
    assert!(!text.contains("1 -> 0"));
    let o = adjoints(&[
        "construct",
        "--family",
        "tournament",
        "--n",
        "2",
        "--format",
        "dot",
    ]);
    assert!(stdout(&o).contains("0 -> 1;"));
}

#[test]
fn verify_reports_are_byte_identical() {
    let args = [
        "--json",
        "verify",
        "--claim",
        "adjunction",
        "--samples",
        "40",
        "--seed",
        "17",
    ];
    let a = adjoints(&args);
    let b = adjoints(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["seed"], 17);
    for key in [
        "claim",
        "params",
        "verdict",
        "witnesses",
        "seed",
        "timing_ms",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_single_instances() {
    let dir = scratch("verify");
    let k4 = build(&dir, "k4.json", &["--family", "complete", "--n", "4"]);
    let o = adjoints(&[
        "verify", "--claim", "minty", "--input", &k4, "--c", "3", "--k", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("minty: PASS"));
    let o = adjoints(&[
        "verify",
        "--claim",
        "duality-tree",
        "--path",
        "++-",
        "--exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = adjoints(&["verify", "--claim", "yz-both-ways", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn steep_path_and_h_function() {
    let o = adjoints(&["find-steep-path", "--ell", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("++-++-++ (8 arcs)"));
    let o = adjoints(&["--json", "h-function", "--k", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn verify_all_quick() {
    let o = adjoints(&["verify-all", "--profile", "quick", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
}
