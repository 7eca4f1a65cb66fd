// SPDX-License-Identifier: Apache-2.0
use std::process::{Command, Output};

use diracconst::report::CaseReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diracconst")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn real_forms_of_sp4() {
    let o = run(&["real-forms", "--group", "sp", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let hs: Vec<Value> = v["forms"].as_array().unwrap().iter().map(|f| f["h"].clone()).collect();
    assert_eq!(hs, vec![serde_json::json!(["-1", "-1"]), serde_json::json!(["1", "-1"]), serde_json::json!(["1", "1"])]);
    assert_eq!(v["dynkin"], serde_json::json!([0, 2]));

    let text = stdout(&run(&["real-forms", "--group", "sp", "--n", "2"]));
    assert!(text.contains("|+|-|"));
}

#[test]
fn third_form_absent_when_q_is_p_minus_one() {
    let o = run(&["real-forms", "--group", "so-odd", "--p", "2", "--q", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1,h1^I,"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["real-forms", "--group", "su", "--p", "0", "--q", "2"][..],
        &["real-forms", "--group", "su", "--p", "2"],
        &["real-forms", "--group", "sp", "--p", "1", "--n", "2"],
        &["real-forms", "--group", "g2", "--n", "2"],
        &["constant", "--group", "sp", "--n", "2", "--form", "7"],
        &["constant", "--group", "sp", "--n", "2", "--form", "0"],
        &["constant", "--group", "sp", "--n", "2", "--term-cap", "0"],
        &["table", "--p", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn term_cap_is_a_capacity_error() {
    let o = run(&["constant", "--group", "su", "--p", "2", "--q", "3", "--form", "2", "--term-cap", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("too-large"));
}

#[test]
fn su_constant_agrees() {
    let o = run(&["constant", "--group", "su", "--p", "2", "--q", "3", "--form", "2", "--method", "both", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = CaseReport::from_json(&stdout(&o)).unwrap();
    let f = &doc.forms[0];
    assert_eq!((f.c_closed, f.c_brute, f.agree), (Some(2), Some(2), Some(true)));
    assert_eq!(f.lambda_used.len(), 3);
}

#[test]
fn zero_constant_and_closed_only() {
    let o = run(&["constant", "--group", "so-odd", "--p", "2", "--q", "2", "--form", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["forms"][0]["cBrute"], 0);
    assert_eq!(v["forms"][0]["cClosed"], 0);

    let o = run(&["constant", "--group", "so-star", "--n", "4", "--form", "2", "--method", "closed", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["forms"][0]["cClosed"], -2);
    assert!(v["forms"][0].get("cBrute").is_none());
}

#[test]
fn disagreement_exits_1() {
    // Even p: the brute-force value has the opposite sign to the closed form.
    let o = run(&["constant", "--group", "so-odd", "--p", "2", "--q", "2", "--form", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("cClosed = 4") && s.contains("cBrute = -4") && s.contains("DISAGREE"), "{s}");
}

#[test]
fn constant_output_is_deterministic() {
    let args = ["constant", "--group", "so-even", "--p", "2", "--q", "3", "--format", "json", "--seed", "11"];
    let a = stdout(&run(&args));
    let mut with_workers = args.to_vec();
    with_workers.extend(["--workers", "4"]);
    assert_eq!(a, stdout(&run(&with_workers)));
    assert_eq!(a, stdout(&run(&args)));
}

#[test]
fn sp10_table_csv() {
    let o = run(&["table", "--group", "sp", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let values: Vec<i64> = r.records().map(|rec| rec.unwrap()[5].parse().unwrap()).collect();
    assert_eq!(values, vec![1, -1, -2, 2, 1, -1]);
}

#[test]
fn so_even_table_prints_formula_values() {
    let o = run(&["table", "--group", "so-even", "--p", "2", "--q", "2"]);
    let s = stdout(&o);
    let values: Vec<i64> = s.lines().skip(1).map(|l| l.split_whitespace().nth(3).unwrap().parse().unwrap()).collect();
    assert_eq!(values, vec![4, 4, 4, 4]);
}

#[test]
fn table_json_for_all_families() {
    let o = run(&["table", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let docs: Vec<CaseReport> = serde_json::from_str(&stdout(&o)).unwrap();
    let families: Vec<&str> = docs.iter().map(|d| d.case.family.as_str()).collect();
    assert_eq!(families, ["su", "so-odd", "sp", "so-even", "so-star"]);
    for d in &docs {
        assert!(d.forms.iter().all(|f| f.c_closed.is_some() && f.closed_form.is_some()));
        assert_eq!(serde_json::from_str::<CaseReport>(&d.to_json()).unwrap(), *d);
    }
}

#[test]
fn latex_tables() {
    let s = stdout(&run(&["table", "--format", "latex"]));
    assert!(s.starts_with("\\begin{tabular}") && s.trim_end().ends_with("\\end{tabular}"));
    assert!(s.contains("\\multicolumn{4}{l}{$SO^*(2)$"));
    assert!(!s.contains("\\texttt{(-1)^"));
    let s = stdout(&run(&["real-forms", "--group", "so-even", "--p", "1", "--q", "1", "--format", "latex"]));
    assert!(s.contains("$h_{2}^{II}$"));
}

#[test]
fn verify_small_budget_passes() {
    let o = run(&["verify", "--max-rank", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}

#[test]
fn verify_injected_fault_fails() {
    let o = run(&["verify", "--max-rank", "1", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["ok"], false);
    let closed = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "closed-form").unwrap();
    assert_eq!(closed["failed"], 1);
}

#[test]
fn verify_reports_the_even_p_sign_mismatch() {
    let o = run(&["verify", "--max-rank", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    for c in v["checks"].as_array().unwrap() {
        let failures: Vec<&str> = c["failures"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
        if c["name"] == "closed-form" {
            assert!(!failures.is_empty());
            assert!(failures.iter().all(|f| f.starts_with("SO_e(4,")), "{failures:?}");
        } else {
            assert!(failures.is_empty(), "{}: {failures:?}", c["name"]);
        }
    }
}
