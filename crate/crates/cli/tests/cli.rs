use std::process::{Command, Output};

use serde_json::Value;

fn stablab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-timing"]);
    let o = stablab(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn info_text_and_json() {
    let o = stablab(&["sg", "info", "3,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m=3 edim=3 F=2"));
    let v = json(&["sg", "info", "<3,4,5>"]);
    assert_eq!(v["input"], "⟨3,4,5⟩");
    assert_eq!(v["result"]["frobenius"], 2);
    assert_eq!(v["result"]["generators"], serde_json::json!([3, 4, 5]));
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn tower_and_ideal() {
    let o = stablab(&["sg", "tower", "2,7"]);
    assert!(stdout(&o).contains("multiplicity_sequence: 2,2,2,1"));
    let o = stablab(&["sg", "ideal", "3,4,5", "--ideal", "0,1", "--stable"]);
    assert!(stdout(&o).contains("stable: false"));
    let v = json(&["sg", "ideal", "3,4,5", "--ideal", "-3,-2", "--stable"]);
    assert_eq!(v["result"]["mu"], 2);
    assert_eq!(v["result"]["stable"], false);
}

#[test]
fn report_field_names() {
    let v = json(&["sg", "report", "2,5"]);
    let r = &v["result"];
    for key in ["all_stable", "quadratic", "bass", "max_mu", "agreement"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    assert_eq!(r["agreement"], true);
    assert_eq!(r["bass"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(stablab(&["sg", "info", "2,4"]).status.code(), Some(2));
    assert_eq!(stablab(&["sg", "info", "x"]).status.code(), Some(2));
    assert_eq!(stablab(&["sg", "frobnicate"]).status.code(), Some(2));
    assert_eq!(stablab(&["sweep", "--max-genus", "40"]).status.code(), Some(3));
    assert_eq!(stablab(&["sg", "ideal", "3,4,5", "--ideal", ""]).status.code(), Some(2));
    assert_eq!(stablab(&["idealization", "check", "--rank", "0"]).status.code(), Some(2));
    assert_eq!(stablab(&["idealization", "check", "--prec", "3"]).status.code(), Some(2));
    assert_eq!(stablab(&["idealization", "check", "--field", "F7"]).status.code(), Some(2));
    assert_eq!(stablab(&["sweep", "--max-genus", "4"]).status.code(), Some(0));
}

#[test]
fn algebra_files() {
    let dir = std::env::temp_dir().join(format!("stablab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    let f4 = write("f4.json", r#"{"field":"F2","dim":2,"table":[[[1,0],[0,1]],[[0,1],[1,1]]]}"#);
    let v = json(&["alg", "classify", &f4]);
    assert_eq!(v["result"]["class"], "QuadraticFieldExtension");

    let bad = write(
        "bad.json",
        r#"{"field":"F2","dim":3,"table":[[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,0,1],[0,0,0]],[[0,0,1],[0,0,0],[0,1,0]]]}"#,
    );
    let o = stablab(&["alg", "classify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotAssociative"));
    assert_eq!(stablab(&["alg", "classify", &dir.join("missing.json").to_string_lossy()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn idealization_check_reports_trials() {
    let v = json(&["idealization", "check", "--field", "F3", "--rank", "2", "--prec", "16", "--trials", "20", "--seed", "7"]);
    let r = &v["result"];
    assert_eq!(r["passed"], true);
    assert_eq!(r["stable"], 20);
    assert_eq!(r["per_trial"].as_array().unwrap().len(), 20);
    assert!(r["per_trial"][0]["margin"].is_number());
    assert_eq!(v["seed"], 7);
    let again = json(&["idealization", "check", "--field", "F3", "--rank", "2", "--prec", "16", "--trials", "20", "--seed", "7"]);
    assert_eq!(v, again);

    let low = json(&["idealization", "check", "--prec", "4", "--trials", "5"]);
    assert!(low["result"]["hilbert"][2]["skipped"].is_string());
}
