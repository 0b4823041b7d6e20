use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use tphi::complex::{order_complex, DEFAULT_SIMPLEX_CAP};
use tphi::homology::homology_groups;
use tphi::models::build_tphi_power;

fn tphi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tphi")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn save(dir: &Path, name: &str, o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let path = dir.join(name);
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn hfcalc_antipodes_give_everything() {
    let o = tphi(&["hfcalc", "0/1 + 1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "FULL +0");
    assert_eq!(stdout(&tphi(&["hfcalc", "0/1", "+", "1/4"])).trim(), "[0/1,1/4]");
    assert_eq!(stdout(&tphi(&["hfcalc", "1/4", "*", "1/2"])).trim(), "3/4");
}

#[test]
fn gp_check_rejects_zero_function() {
    let dir = TempDir::new().unwrap();
    let zero = write(&dir, "zero.txt", "3 2\n1 2 : 0\n1 3 : 0\n2 3 : 0\n");
    let o = tphi(&["gp-check", &zero]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not identically zero"));

    let ok = write(&dir, "ok.txt", "3 2\n1 2 : 0/1\n1 3 : 0/1\n2 3 : 0/1\n");
    let o = tphi(&["gp-check", &ok]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
}

#[test]
fn power_model_through_files() {
    let dir = TempDir::new().unwrap();
    let poset = save(dir.path(), "p.txt", &tphi(&["model-build", "power", "--n", "2", "--k", "2"]));
    let complex = save(dir.path(), "c.txt", &tphi(&["order-complex", &poset]));
    let o = tphi(&["homology", "--reduced", &complex]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "H~_1 = Z^1"));
    assert_eq!(stdout(&tphi(&["homology", "--reduced", "--poset", &poset])), stdout(&o));
}

/// Re-parsing exported order complexes gives the in-process homology.
#[test]
fn order_complex_round_trip() {
    let dir = TempDir::new().unwrap();
    for (n, k) in [(2, 3), (3, 2), (2, 4)] {
        let (ns, ks) = (n.to_string(), k.to_string());
        let poset = save(dir.path(), "p.txt", &tphi(&["model-build", "power", "--n", &ns, "--k", &ks]));
        let complex = save(dir.path(), "c.txt", &tphi(&["order-complex", &poset]));
        let expected = homology_groups(&order_complex(&build_tphi_power(n, k as u64, DEFAULT_SIMPLEX_CAP).unwrap().poset, DEFAULT_SIMPLEX_CAP).unwrap(), false);
        let got = stdout(&tphi(&["homology", &complex]));
        assert_eq!(got.lines().collect::<Vec<_>>(), expected.lines());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gp-enum", "--n", "4", "--r", "2", "--k", "2"][..],
        &["--format", "json-lines", "gp-enum", "--n", "3", "--r", "2", "--k", "4"][..],
        &["model-build", "grassmannian", "--n", "3", "--r", "2", "--k", "2"][..],
        &["transversal", "--n", "5", "--r", "3"][..],
    ] {
        let a = tphi(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, tphi(args).stdout, "{args:?}");
    }
}

#[test]
fn perp_prints_discretization_caveat() {
    let o = tphi(&["perp", "--k", "2", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("# caveat:"));
    assert!(text.lines().any(|l| l == "count: 2"));

    let member = tphi(&["perp", "--k", "2", "--x", "0/1,1/2", "1,1"]);
    assert_eq!(member.status.code(), Some(0));
    let outside = tphi(&["perp", "--k", "2", "--x", "0/1,0/1", "1,1"]);
    assert_eq!(outside.status.code(), Some(1));

    let model = tphi(&["model-build", "perp", "--k", "2", "--vector", "1,1"]);
    assert!(stdout(&model).starts_with("# caveat:"));
}

#[test]
fn json_lines_output() {
    let o = tphi(&["--format", "json-lines", "transversal", "--n", "3", "--r", "2"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.is_object(), "{line}");
    }
}

#[test]
fn transversal_trace() {
    let o = tphi(&["transversal", "--n", "3", "--r", "2"]);
    assert_eq!(stdout(&o), "d = 3, C(n,r) = 3\n(1,2)\n(1,3)\n(2,3)\nproperties: hold\n");
}

#[test]
fn input_errors_exit_two() {
    let o = tphi(&["homology", "/nonexistent/complex.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);

    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "0\n0\n");
    assert_eq!(tphi(&["gp-check", &bad]).status.code(), Some(2));
    assert_eq!(tphi(&["hfcalc", "1/0"]).status.code(), Some(2));
    assert_eq!(tphi(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn mccord_and_cw_reports() {
    let dir = TempDir::new().unwrap();
    let poset = save(dir.path(), "p.txt", &tphi(&["model-build", "power", "--n", "2", "--k", "2"]));
    let o = tphi(&["mccord-verify", &poset]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("cone-apex")).count(), 8);
    assert!(text.ends_with("verdict: pass\n"));

    let o = tphi(&["cw-report", &poset]);
    assert!(stdout(&o).ends_with("verdict: obstructed\n"));
}
