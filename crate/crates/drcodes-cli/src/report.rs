//! Report emission. JSON documents keep a fixed key order so runs diff
//! cleanly; tables are a lossy human view of the same fields.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use drcodes::error::Result;
use drcodes::scalar::Scalar;
use serde_json::Value;

/// Writes to `out` when given, stdout otherwise.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn json_doc(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialization");
    s.push('\n');
    s
}

/// Scalars travel as strings ("7", "-1", "1/6") so exact values survive the
/// round trip.
pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn scalar_list(v: &[Scalar]) -> String {
    v.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn words(n: usize) -> String {
    if n == 1 {
        "1 word".into()
    } else {
        format!("{n} words")
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

/// Aligned `label  value` lines.
pub fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (label, value) in rows {
        out.push_str(&format!("{label:width$}  {value}\n"));
    }
    out
}
