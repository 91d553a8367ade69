use std::process::{Command, Output};

use serde_json::Value;
use splitcryst::fingroup::FinGroupType;
use splitcryst::kgroup::{FiniteKTable, KExpr};
use splitcryst_cli::goldens::{diff, Goldens};
use splitcryst_cli::report::compute_all;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcryst")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ktheory_of_gamma_1() {
    let o = run(&["ktheory", "Gamma_1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "K_-1 = Z^2; K0~ = (Z/4)^4 + inf(Z/2) + inf(Z/4); Wh = inf(Z/2) + 2*NK1(ZD4)\n");
}

#[test]
fn trivial_group_json() {
    let o = run(&["--json", "ktheory", "C1+_1"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["label"], "C1+_1");
    for k in ["K_minus1", "K0_tilde", "Wh"] {
        assert_eq!(v[k], "0", "{k}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["ktheory", "D6+_1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["domain", "8"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with(" 0 mismatches\n"));
}

#[test]
fn batch_output_is_deterministic() {
    let a = run(&["--json", "ktheory", "--all"]);
    let b = run(&["--json", "ktheory", "--all"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 73);
}

#[test]
fn text_subcommands_run() {
    for args in [
        &["catalog"][..],
        &["classify", "D4+_1"],
        &["domain", "5"],
        &["stabilizers", "Gamma_3"],
        &["lines", "Gamma_5"],
        &["--json", "domain", "2"],
        &["--json", "lines", "D4+x(-1)_1"],
    ] {
        let o = run(args);
        assert!(o.status.success(), "{args:?}");
        assert!(!o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn corrupted_table_is_caught() {
    let mut table = FiniteKTable::default();
    table.set(FinGroupType::A4xZ2, 0, KExpr::z4(1));
    let data = compute_all(&table).unwrap();
    let report = diff(&Goldens::embedded().unwrap(), &table, &data).unwrap();
    let got: Vec<(String, String)> = report.mismatches.iter().map(|m| (m.table.clone(), m.key.clone())).collect();
    let mut want: Vec<(String, String)> = vec![("finite_k".into(), "A4xZ/2 K0~".into())];
    for t in ["hfin", "ktheory"] {
        for i in 1..=3 {
            want.push((t.into(), format!("A4+x(-1)_{i} K0~")));
        }
    }
    want.sort();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    assert_eq!(got_sorted, want, "{:#?}", report.mismatches);
}
