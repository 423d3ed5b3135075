//! JSON encoding of scalars, vectors, matrices and field configurations.
//!
//! Rationals are written as `"p/q"` in lowest terms (also for integers), prime
//! field elements as integers `0..p`. Parsing accepts `"n"` and plain JSON
//! integers as well.

use serde_json::{json, Value};

use crate::exactla::{Field, Matrix, Scalar};
use crate::{Error, Result};

pub const SCHEMA: &str = "1";

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!({"kind": "rationals"}),
        Field::Prime(p) => json!({"kind": "prime_field", "p": p}),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    match v.get("kind").and_then(Value::as_str) {
        Some("rationals") => Ok(Field::Rationals),
        Some("prime_field") => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Schema("prime_field needs an integer \"p\"".into()))?;
            Field::prime(p)
        }
        other => Err(Error::Schema(format!("unknown field kind {other:?}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    s.to_json()
}

pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => field.parse(&n.to_string()),
        _ => Err(Error::Schema(format!("expected a field element, found {v}"))),
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(field: Field, v: &Value, len: usize, what: &str) -> Result<Vec<Scalar>> {
    let arr = v.as_array().ok_or_else(|| Error::Schema(format!("{what}: expected an array")))?;
    if arr.len() != len {
        return Err(Error::Schema(format!("{what}: expected {len} entries, found {}", arr.len())));
    }
    arr.iter().map(|x| scalar_from_json(field, x)).collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_dense().iter().map(|r| vector_to_json(r)).collect())
}

/// A list of rows with the given shape.
pub fn matrix_from_json(field: Field, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| Error::Schema(format!("{what}: expected a list of rows")))?;
    if arr.len() != rows {
        return Err(Error::Schema(format!("{what}: expected {rows} rows, found {}", arr.len())));
    }
    let dense = arr
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(field, r, cols, &format!("{what} row {i}")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, dense)
}

pub fn get<'a>(v: &'a Value, key: &str, what: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Schema(format!("{what}: missing field \"{key}\"")))
}

pub fn get_usize(v: &Value, key: &str, what: &str) -> Result<usize> {
    get(v, key, what)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Schema(format!("{what}: \"{key}\" must be a non-negative integer")))
}

/// Rejects documents whose `"schema"` tag is present and not `"1"`.
pub fn check_schema(v: &Value) -> Result<()> {
    match v.get("schema") {
        None => Ok(()),
        Some(Value::String(s)) if s == SCHEMA => Ok(()),
        Some(other) => Err(Error::Schema(format!("unsupported schema version {other}"))),
    }
}
