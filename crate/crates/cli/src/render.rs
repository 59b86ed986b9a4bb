//! Plain-text renderings of the JSON result records.

use std::fmt::Write;

use serde_json::Value;

use stablab_core::sweep::SweepReport;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(_) | Value::Object(_) => None,
                other => scalar(other),
            })
            .collect::<Option<Vec<_>>>()
            .map(|parts| parts.join(",")),
        Value::Object(_) => None,
    }
}

/// `key: value` lines; nested records are indented, lists of records are
/// written as JSON.
pub fn record(v: &Value) -> String {
    let mut out = String::new();
    write_record(&mut out, v, 0);
    out
}

fn write_record(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    let Value::Object(map) = v else {
        let _ = writeln!(out, "{pad}{}", scalar(v).unwrap_or_else(|| v.to_string()));
        return;
    };
    for (k, val) in map {
        if let Some(s) = scalar(val) {
            let _ = writeln!(out, "{pad}{k}: {s}");
        } else if val.is_object() {
            let _ = writeln!(out, "{pad}{k}:");
            write_record(out, val, indent + 1);
        } else {
            let _ = writeln!(out, "{pad}{k}: {val}");
        }
    }
}

pub fn sweep(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "max_genus: {}", r.config.max_genus);
    let _ = writeln!(out, "semigroups: {}", r.semigroups);
    let per: Vec<String> = r.per_genus.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "per_genus: {}", per.join(","));
    let _ = writeln!(out, "ideals: {}", r.ideals);
    let _ = writeln!(out, "stable_semigroups: {}", r.stable_semigroups);
    let _ = writeln!(out, "bass_semigroups: {}", r.bass_semigroups);
    let _ = writeln!(out, "verdict_divergences: {}", r.verdict_divergences);
    for (name, t) in &r.checks {
        let _ = writeln!(out, "  {name}: checked {} violations {}", t.checked, t.violations);
    }
    let s = &r.sally;
    let _ = writeln!(
        out,
        "sally: ideals {} hypothesis {} conclusion {} hard_violations {} boundary_cases {}",
        s.ideals, s.hypothesis_true, s.conclusion_true, s.hard_violations, s.boundary_cases
    );
    let _ = writeln!(out, "violations: {}", r.total_violations);
    for v in &r.violations {
        let _ = writeln!(out, "  [{}] {:?} {:?}: {}", v.check, v.semigroup, v.ideal, v.detail);
    }
    out
}

pub fn idealization(v: &Value) -> String {
    let mut out = String::new();
    for key in ["field", "rank", "precision", "expected_slope"] {
        let _ = writeln!(out, "{key}: {}", scalar(&v[key]).unwrap_or_default());
    }
    let sz = &v["square_zero_prime"];
    let _ = writeln!(out, "p_squared_zero: {}", sz["p_squared_zero"]);
    let _ = writeln!(out, "quotient_is_dvr: {}", sz["quotient_is_dvr"]);
    if let Some(probes) = v["hilbert"].as_array() {
        for p in probes {
            match (&p["length"], &p["skipped"]) {
                (Value::Number(n), _) => {
                    let _ = writeln!(out, "hilbert_length({}): {n}", p["n"]);
                }
                (_, Value::String(reason)) => {
                    let _ = writeln!(out, "hilbert_length({}): skipped ({reason})", p["n"]);
                }
                _ => {}
            }
        }
    }
    if let Some(slopes) = v["slopes"].as_array() {
        let diffs: Vec<String> = slopes.iter().map(|s| s["difference"].to_string()).collect();
        let _ = writeln!(out, "slopes: {}", diffs.join(","));
    }
    for key in ["trials", "stable", "not_stable", "inconclusive", "inconclusive_rate", "passed"] {
        let _ = writeln!(out, "{key}: {}", scalar(&v[key]).unwrap_or_default());
    }
    out
}
