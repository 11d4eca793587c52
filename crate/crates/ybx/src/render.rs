//! Text and JSON rendering of outcomes.

use std::fmt::Write;

use serde_json::{json, Map as JsonMap, Value};
use ybx_core::report::CheckEntry;

use crate::commands::Outcome;
use crate::json::to_canonical;

fn entry_value(e: &CheckEntry) -> Value {
    json!({
        "id": e.id,
        "law": e.law,
        "pass": e.pass,
        "witness": e.witness,
        "violations": e.violations,
        "elapsed_us": e.elapsed_us,
    })
}

pub fn to_json(outcome: &Outcome, file: &str) -> Value {
    let output: JsonMap<String, Value> = outcome.output.iter().cloned().collect();
    json!({
        "command": outcome.command,
        "kind": outcome.kind,
        "file": file,
        "passed": outcome.report.passed(),
        "elapsed_us": outcome.elapsed_us,
        "output": output,
        "entries": outcome.report.entries.iter().map(entry_value).collect::<Vec<_>>(),
    })
}

pub fn render_json(outcome: &Outcome, file: &str) -> String {
    to_canonical(&to_json(outcome, file))
}

fn write_output(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Array(rows) if rows.iter().any(Value::is_array) => {
            let _ = writeln!(out, "{key}:");
            for row in rows {
                let _ = writeln!(out, "  {row}");
            }
        }
        Value::Array(items) if key == "characters" => {
            for item in items {
                let _ = writeln!(out, "character: {}", item.as_str().unwrap_or_default());
            }
        }
        other => {
            let _ = writeln!(out, "{key}: {other}");
        }
    }
}

pub fn render_text(outcome: &Outcome, file: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {file} ({})", outcome.command, outcome.kind);
    for (k, v) in &outcome.output {
        write_output(&mut out, k, v);
    }
    for e in &outcome.report.entries {
        let _ = match e.elapsed_us {
            Some(us) => writeln!(out, "{} [{us} us]", e.describe()),
            None => writeln!(out, "{}", e.describe()),
        };
    }
    let failed = outcome.report.failures().count();
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{verdict}: {} checks, {failed} failed, {:.3} ms",
        outcome.report.entries.len(),
        outcome.elapsed_us as f64 / 1000.0
    );
    out
}
