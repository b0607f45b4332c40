use std::fs;
use std::process::{Command, Output};

fn cozero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cozero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn build_writes_json_and_counts() {
    let o = cozero(&["build", "--ring", "Z12", "--ideal", "0", "--family", "qGammaDblPrime", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let g: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(g["edges"].as_array().unwrap().len(), 4);
    assert!(stderr(&o).contains("4 vertices, 4 edges"));

    let o = cozero(&["build", "--ring", "Z24", "--ideal", "(12)", "--family", "qGammaDblPrime"]);
    assert!(stderr(&o).contains("8 vertices, 16 edges"));
    assert!(stdout(&o).starts_with("graph \"qGammaDblPrime\""));
    let o = cozero(&["build", "--ring", "Z24", "--ideal", "(6)", "--family", "gammaDblPrime"]);
    assert!(stderr(&o).contains("12 vertices, 32 edges"));
}

#[test]
fn build_to_file_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    for p in [&a, &b] {
        let o = cozero(&["build", "--ring", "Z2xZ2xZ3", "--family", "gammaDblPrime", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("vertices"));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["build", "--ring", "Z1", "--family", "gamma"],
        vec!["build", "--ring", "Z12", "--ideal", "(1)"],
        vec!["build", "--ring", "Z12", "--family", "nope"],
        vec!["build", "--ring", "Z12", "--ideal", "(5,5)"],
        vec!["check", "--claims", "THM-0.0"],
        vec!["enumerate", "--filter", "odd"],
        vec!["zmodel", "--n", "1"],
        vec!["frobnicate"],
    ] {
        let o = cozero(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn io_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("r.json");
    let o = cozero(&["check", "--max-card", "4", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = cozero(&["figures", "--golden", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = cozero(&["check", "--max-card", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!report["verdicts"].as_array().unwrap().is_empty());
    assert_eq!(report["summary"]["expected_to_hold_failures"], 0);

    // Z6 with I = 0: the deleted graph is the path 2 - 3 - 4.
    let o = cozero(&["check", "--max-card", "6", "--claims", "THM-CUT", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("THM-CUT"));

    let o = cozero(&["check", "--max-card", "24", "--claims", "THM-2.6,PROP-2.5", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));

    // n = 0 is evaluated only on request; 2 and 3 are adjacent there.
    let o = cozero(&["check", "--max-card", "4", "--claims", "COR-2.8a", "--z-values", "0,8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = ["1", "4"]
        .iter()
        .map(|jobs| {
            let p = dir.path().join(format!("r{jobs}.json"));
            cozero(&["check", "--max-card", "12", "--jobs", jobs, "--out", p.to_str().unwrap()]);
            p
        })
        .collect();
    assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
}

#[test]
fn figures_match_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let o = cozero(&["figures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": ok").count(), 6);
    assert!(dir.path().join("figure_d.json").exists());

    let golden = tempfile::tempdir().unwrap();
    for f in ['a', 'b', 'c', 'd', 'e', 'f'] {
        let src = format!("{}/golden/figure_{f}", env!("CARGO_MANIFEST_DIR"));
        let mut text = fs::read_to_string(src).unwrap();
        if f == 'a' {
            text = text.replace("e (2) (3)\n", "e (2) (10)\n");
        }
        fs::write(golden.path().join(format!("figure_{f}")), text).unwrap();
    }
    let o = cozero(&["figures", "--golden", golden.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("figure A: mismatch"));
    assert!(text.contains("+ e (2) (3)"));
    assert!(text.contains("- e (2) (10)"));
}

#[test]
fn zmodel_reports() {
    let o = cozero(&["zmodel", "--n", "12"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    for line in ["gamma: 2", "n/p^a classes: {3, 4} (dominating)", "bipartite: yes (complete)", "diameter: 2", "girth: 4"] {
        assert!(text.contains(line), "{line} in {text}");
    }
    assert!(stdout(&cozero(&["zmodel", "--n", "8"])).contains("empty"));
    assert!(stdout(&cozero(&["zmodel", "--n", "210"])).contains("gamma: 2"));
}

#[test]
fn invariants_and_enumerate() {
    let o = cozero(&["invariants", "--ring", "Z3xZ3", "--family", "qGammaDblPrime", "--budget-ham", "8", "--budget-chi", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["hamiltonian"], true);
    assert_eq!(r["girth"], 4);

    let o = cozero(&["enumerate", "--max-card", "4"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = cozero(&["enumerate", "--ring", "Z12", "--filter", "nonzero"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}
