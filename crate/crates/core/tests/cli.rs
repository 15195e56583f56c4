use std::path::Path;
use std::process::{Command, Output};

fn condexp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_condexp")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn approx_csv_layout() {
    let o = condexp(&["approx", "--n", "8", "--probes", "101"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# condexp approx fn=projectile("));
    for key in ["n=8", "family=tri", "mode=closed", "panels=64", "probes=101"] {
        assert!(lines[0].contains(key), "{key} missing from {}", lines[0]);
    }
    assert!(lines[1].contains("within_bound=true"));
    assert_eq!(lines[2], "x,f,f_n,abs_diff");
    assert_eq!(lines.len(), 3 + 101);
    // 17 significant digits round-trip exactly
    let x: f64 = lines[3 + 37].split(',').next().unwrap().parse().unwrap();
    assert_eq!(x, 37.0 / 100.0);
}

#[test]
fn approx_json_mirrors_report() {
    let o = condexp(&["approx", "--n", "4", "--family", "trig", "--probes", "101", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["mode"], "quad");
    assert_eq!(v["rows"].as_array().unwrap().len(), 101);
    let sup = v["report"]["sup_error"].as_f64().unwrap();
    let max = v["rows"].as_array().unwrap().iter().map(|r| r["abs_diff"].as_f64().unwrap()).fold(0.0, f64::max);
    assert_eq!(sup, max);
}

#[test]
fn study_rows_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("study.csv");
    let o = condexp(&["study", "--expr", "sin(pi*x)", "--ns", "2,4,8", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = read(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains("fn=expr(sin(pi*x))") && lines[0].contains("n=2;4;8"));
    assert_eq!(lines[1], "n,sup_error,bound_3dy,residual_sup");
    let ns: Vec<&str> = lines[2..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, ["2", "4", "8"]);
}

#[test]
fn density_grid_shape() {
    let o = condexp(&["density", "--poly", "-1,2", "--n", "3", "--res", "8x4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].starts_with("# H=") && lines[1].contains("res=8x4"));
    assert_eq!(lines[2].split(',').count(), 5);
    assert_eq!(lines.len(), 3 + 8);
    assert!(lines[3..].iter().all(|l| l.split(',').count() == 5));
}

#[test]
fn well_table() {
    let o = condexp(&["well", "--n", "5", "--probes", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().nth(1) == Some("# nu=2.5 lambda=0.4 product=1"));
    assert_eq!(text.lines().nth(2), Some("x,psi_n,phi_n,psi_n_sq,phi_n_sq"));
    assert_eq!(text.lines().count(), 3 + 11);
}

#[test]
fn lemma_modes() {
    let o = condexp(&["lemma", "--values", "3,1,2"]);
    assert_eq!(stdout(&o), "lemma fixture: d=1 e=2 pass\n");
    let o = condexp(&["lemma", "--count", "200", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("failures=0"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["lemma", "--count", "0"][..],
        &["approx", "--n", "2", "--expr", "x**"],
        &["approx", "--n", "0"],
        &["approx", "--n", "2", "--family", "quad"],
        &["approx", "--n", "2", "--fn", "nope"],
        &["approx", "--n", "2", "--probes", "50"],
        &["density", "--n", "2", "--res", "0x3"],
        &["study"],
        &["frobnicate"],
    ] {
        assert_eq!(condexp(args).status.code(), Some(1), "{args:?}");
    }
    let o = condexp(&["approx", "--n", "2", "--expr", "x**"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));
}

#[test]
fn numeric_errors_exit_two() {
    for args in [
        &["well", "--n", "0"][..],
        &["approx", "--n", "2", "--expr", "sqrt(x-2)"],
        &["density", "--n", "2", "--fn", "const:-4"],
    ] {
        assert_eq!(condexp(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(condexp(&["--help"]).status.code(), Some(0));
    assert_eq!(condexp(&["approx", "--help"]).status.code(), Some(0));
}
