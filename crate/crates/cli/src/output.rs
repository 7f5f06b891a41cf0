//! JSON value helpers and the CSV rendering of a report.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use bound_engine::RootBracket;

/// Big integers are decimal strings.
pub fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

/// Rationals are `[numerator, denominator]` pairs of decimal strings.
pub fn rat(x: &BigRational) -> Value {
    json!([x.numer().to_string(), x.denom().to_string()])
}

/// Root brackets are `[lo, hi]` with both ends as rational pairs.
pub fn bracket(b: &RootBracket) -> Value {
    json!([rat(&b.lo), rat(&b.hi)])
}

/// CSV columns, in order.
pub const CSV_COLUMNS: [&str; 7] = ["command", "r", "s", "k", "case", "field", "value"];

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |key: &str| if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") };
    match v {
        Value::Object(map) => {
            for (key, child) in map {
                flatten(&join(key), child, out);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        leaf => out.push((prefix.to_string(), scalar(leaf))),
    }
}

/// One row per leaf of `result`, keyed by its dotted path (array elements by
/// index), after the command and parameters; see [`CSV_COLUMNS`].
pub fn to_csv(report: &Value) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_COLUMNS).expect("in-memory write");
    let params = &report["params"];
    let fixed = [
        scalar(&report["command"]),
        scalar(&params["r"]),
        scalar(&params["s"]),
        scalar(&params["k"]),
        scalar(&params["case"]),
    ];
    let mut leaves = Vec::new();
    flatten("", &report["result"], &mut leaves);
    for (field, value) in leaves {
        let mut row: Vec<&str> = fixed.iter().map(String::as_str).collect();
        row.push(&field);
        row.push(&value);
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_flattens_in_key_order() {
        let report = json!({
            "command": "scan",
            "params": {"r": 4, "s": 1, "k": 1, "case": "CASE1"},
            "result": {"b": [1, "x,y"], "a": null},
            "version": "0"
        });
        let csv = to_csv(&report);
        assert_eq!(csv, "command,r,s,k,case,field,value\nscan,4,1,1,CASE1,a,\nscan,4,1,1,CASE1,b.0,1\nscan,4,1,1,CASE1,b.1,\"x,y\"\n");
    }
}
