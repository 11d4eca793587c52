//! Scalar, field and matrix encodings, and the canonical JSON writer.

use serde_json::{Map as JsonMap, Value};
use ybx_core::field::{FieldSpec, Scalar};
use ybx_core::map::Map;
use ybx_core::matrix::ExactMatrix;
use ybx_core::setfn::SetFn;

use crate::error::{CliError, CliResult};

/// A JSON object being read, with the path used in error messages.
pub struct Obj<'a> {
    pub path: String,
    map: &'a JsonMap<String, Value>,
}

impl<'a> Obj<'a> {
    pub fn new(path: impl Into<String>, v: &'a Value) -> CliResult<Self> {
        let path = path.into();
        match v {
            Value::Object(map) => Ok(Obj { path, map }),
            _ => Err(CliError::schema(&path, "expected an object")),
        }
    }

    fn at(&self, key: &str) -> String {
        format!("{}.{key}", self.path)
    }

    pub fn get(&self, key: &str) -> CliResult<&'a Value> {
        self.map
            .get(key)
            .ok_or_else(|| CliError::schema(&self.path, format!("missing field {key:?}")))
    }

    pub fn opt(&self, key: &str) -> Option<&'a Value> {
        self.map.get(key).filter(|v| !v.is_null())
    }

    pub fn obj(&self, key: &str) -> CliResult<Obj<'a>> {
        Obj::new(self.at(key), self.get(key)?)
    }

    pub fn str(&self, key: &str) -> CliResult<&'a str> {
        self.get(key)?
            .as_str()
            .ok_or_else(|| CliError::schema(&self.at(key), "expected a string"))
    }

    pub fn bool_or(&self, key: &str, default: bool) -> CliResult<bool> {
        match self.opt(key) {
            None => Ok(default),
            Some(v) => v.as_bool().ok_or_else(|| CliError::schema(&self.at(key), "expected a boolean")),
        }
    }

    pub fn usize(&self, key: &str) -> CliResult<usize> {
        index(&self.at(key), self.get(key)?)
    }

    pub fn indices(&self, key: &str) -> CliResult<Vec<usize>> {
        indices(&self.at(key), self.get(key)?)
    }

    pub fn table(&self, key: &str) -> CliResult<Vec<Vec<usize>>> {
        table(&self.at(key), self.get(key)?)
    }

    pub fn array(&self, key: &str) -> CliResult<&'a Vec<Value>> {
        self.get(key)?
            .as_array()
            .ok_or_else(|| CliError::schema(&self.at(key), "expected an array"))
    }

    pub fn field(&self, key: &str) -> CliResult<FieldSpec> {
        match self.opt(key) {
            None => Ok(FieldSpec::Rationals),
            Some(v) => {
                let text = v.as_str().ok_or_else(|| CliError::schema(&self.at(key), "expected a field name"))?;
                parse_field(text).map_err(|m| CliError::schema(&self.at(key), m))
            }
        }
    }

    pub fn matrix(&self, key: &str, field: FieldSpec) -> CliResult<ExactMatrix> {
        matrix(&self.at(key), self.get(key)?, field)
    }

    pub fn matrices(&self, key: &str, field: FieldSpec) -> CliResult<Vec<ExactMatrix>> {
        let path = self.at(key);
        self.array(key)?
            .iter()
            .enumerate()
            .map(|(i, v)| matrix(&format!("{path}[{i}]"), v, field))
            .collect()
    }

    pub fn names(&self, key: &str, n: usize) -> CliResult<Option<Vec<String>>> {
        let Some(v) = self.opt(key) else {
            return Ok(None);
        };
        let path = self.at(key);
        let items = v.as_array().ok_or_else(|| CliError::schema(&path, "expected an array of names"))?;
        if items.len() != n {
            return Err(CliError::schema(&path, format!("expected {n} names, found {}", items.len())));
        }
        items
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| CliError::schema(&path, "expected a string")))
            .collect::<CliResult<Vec<_>>>()
            .map(Some)
    }
}

/// `"Q"` or a prime field `"F_7"`, also accepting `"F7"` and `"GF(7)"`.
pub fn parse_field(text: &str) -> Result<FieldSpec, String> {
    let t = text.trim();
    if matches!(t, "Q" | "QQ" | "rationals") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix('F'))
        .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| format!("unknown field {text:?}"))?;
    let p: u64 = digits.parse().map_err(|_| format!("unknown field {text:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

pub fn index(path: &str, v: &Value) -> CliResult<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| CliError::schema(path, "expected a non-negative integer"))
}

pub fn indices(path: &str, v: &Value) -> CliResult<Vec<usize>> {
    let items = v.as_array().ok_or_else(|| CliError::schema(path, "expected an array of integers"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| index(&format!("{path}[{i}]"), x))
        .collect()
}

/// A square table of indices; ragged rows are schema errors.
pub fn table(path: &str, v: &Value) -> CliResult<Vec<Vec<usize>>> {
    let rows = v.as_array().ok_or_else(|| CliError::schema(path, "expected an array of rows"))?;
    let out: Vec<Vec<usize>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| indices(&format!("{path}[{i}]"), r))
        .collect::<CliResult<_>>()?;
    if let Some((i, r)) = out.iter().enumerate().find(|(_, r)| r.len() != out[0].len()) {
        return Err(CliError::schema(
            &format!("{path}[{i}]"),
            format!("ragged table: row of length {} after rows of length {}", r.len(), out[0].len()),
        ));
    }
    Ok(out)
}

pub fn scalar(path: &str, v: &Value, field: FieldSpec) -> CliResult<Scalar> {
    let parsed = match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => field.parse(&n.to_string()),
        },
        Value::String(s) => field.parse(s),
        _ => return Err(CliError::schema(path, "expected a scalar")),
    };
    parsed.map_err(|e| CliError::schema(path, e.to_string()))
}

/// Row-major nested arrays; an empty outer array is a `0 × 0` matrix.
pub fn matrix(path: &str, v: &Value, field: FieldSpec) -> CliResult<ExactMatrix> {
    let rows = v.as_array().ok_or_else(|| CliError::schema(path, "expected a matrix"))?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let items = r.as_array().ok_or_else(|| CliError::schema(&p, "expected a row"))?;
        out.push(
            items
                .iter()
                .enumerate()
                .map(|(j, x)| scalar(&format!("{p}[{j}]"), x, field))
                .collect::<CliResult<Vec<_>>>()?,
        );
    }
    if let Some(i) = out.iter().position(|r| r.len() != out[0].len()) {
        return Err(CliError::schema(&format!("{path}[{i}]"), "ragged matrix"));
    }
    Ok(ExactMatrix::from_rows(field, out)?)
}

/// Integral scalars become JSON integers, everything else a string.
pub fn scalar_value(s: &Scalar) -> Value {
    let text = s.to_string();
    match text.parse::<i64>() {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(text),
    }
}

pub fn matrix_value(m: &ExactMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(scalar_value).collect()))
            .collect(),
    )
}

pub fn indices_value(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x)).collect())
}

pub fn table_value(rows: &[Vec<usize>]) -> Value {
    Value::Array(rows.iter().map(|r| indices_value(r)).collect())
}

/// Set maps are flat index tables, linear maps are matrices.
pub fn map_value(m: &Map) -> Value {
    match m {
        Map::Set(f) => indices_value(f.table()),
        Map::Linear(a) => matrix_value(a),
    }
}

pub fn map_from(path: &str, v: &Value, field: Option<FieldSpec>, cod: usize) -> CliResult<Map> {
    match field {
        None => Ok(Map::Set(SetFn::new(indices(path, v)?, cod)?)),
        Some(f) => Ok(Map::Linear(matrix(path, v, f)?)),
    }
}

/// Sorted keys, two-space indentation, arrays of scalars on one line and
/// nested arrays one row per line.
pub fn to_canonical(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|x| !x.is_array() && !x.is_object())
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(out, &map[k.as_str()], depth + 1);
                if i + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if is_flat(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q"), Ok(FieldSpec::Rationals));
        assert_eq!(parse_field("F_7"), Ok(FieldSpec::Prime(7)));
        assert_eq!(parse_field("GF(5)"), Ok(FieldSpec::Prime(5)));
        assert!(parse_field("F_8").is_err());
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn scalars_accept_unicode_minus() {
        let q = FieldSpec::Rationals;
        let a = scalar("x", &json!("\u{2212}2/3"), q).unwrap();
        assert_eq!(a, q.parse("-2/3").unwrap());
        assert_eq!(scalar_value(&a), json!("-2/3"));
        assert_eq!(scalar_value(&q.from_i64(-4)), json!(-4));
        assert!(scalar("x", &json!(true), q).is_err());
    }

    #[test]
    fn ragged_tables_are_rejected() {
        let err = table("t", &json!([[0, 1], [1]])).unwrap_err();
        assert!(matches!(err, CliError::Schema { .. }));
    }

    #[test]
    fn canonical_layout() {
        let v = json!({"b": [[0, 1], [1, 0]], "a": "x", "c": {}});
        assert_eq!(
            to_canonical(&v),
            "{\n  \"a\": \"x\",\n  \"b\": [\n    [0, 1],\n    [1, 0]\n  ],\n  \"c\": {}\n}\n"
        );
    }
}
