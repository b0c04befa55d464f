//! JSON payloads: integers, exact rational strings `"a/b"`, and the matrices
//! and vectors built from them.

use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Number, Value};

use crate::exact::{format_rational, parse_rational, IntMatrix, RatMatrix, RatVector, Rational};
use crate::Error;

/// Payload errors are usage errors, kept apart from domain errors.
#[derive(Debug)]
pub struct PayloadError(pub String);

pub type PResult<T> = std::result::Result<T, PayloadError>;

fn bad(what: &str, v: &Value) -> PayloadError {
    PayloadError(format!("expected {what}, got {v}"))
}

pub fn parse(text: &str) -> PResult<Value> {
    serde_json::from_str(text).map_err(|e| PayloadError(format!("invalid JSON {text:?}: {e}")))
}

pub fn rational(v: &Value) -> PResult<Rational> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(bad("an integer or an \"a/b\" string", v)),
    };
    parse_rational(&s).map_err(|_| bad("an integer or an \"a/b\" string", v))
}

pub fn integer(v: &Value) -> PResult<BigInt> {
    let x = rational(v)?;
    if !x.is_integer() {
        return Err(bad("an integer", v));
    }
    Ok(x.to_integer())
}

pub fn rat_vector(v: &Value) -> PResult<RatVector> {
    let items = v.as_array().ok_or_else(|| bad("a vector", v))?;
    Ok(RatVector::new(items.iter().map(rational).collect::<PResult<_>>()?))
}

pub fn rat_matrix(v: &Value) -> PResult<RatMatrix> {
    let rows = v.as_array().ok_or_else(|| bad("a matrix", v))?;
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| rat_vector(r).map(|x| x.entries().to_vec()))
        .collect::<PResult<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    RatMatrix::from_rows(rows, cols).map_err(|e| PayloadError(e.to_string()))
}

pub fn int_matrix(v: &Value) -> PResult<IntMatrix> {
    rat_matrix(v)?
        .to_integer()
        .ok_or_else(|| bad("an integer matrix", v))
}

pub fn is_matrix(v: &Value) -> bool {
    v.as_array().is_some_and(|rows| !rows.is_empty() && rows.iter().all(Value::is_array))
}

pub fn int(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal integers are JSON numbers"))
}

pub fn uint(x: &BigUint) -> Value {
    int(&BigInt::from(x.clone()))
}

/// Integers as numbers, fractions as `"a/b"` strings; re-parses to the same
/// value.
pub fn rat(x: &Rational) -> Value {
    if x.is_integer() {
        int(x.numer())
    } else {
        Value::String(format_rational(x))
    }
}

pub fn int_list(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn uint_list(xs: &[BigUint]) -> Value {
    Value::Array(xs.iter().map(uint).collect())
}

pub fn int_matrix_value(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| int_list(m.row(i))).collect())
}

pub fn rat_matrix_value(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(rat).collect())).collect())
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub fn error_value(e: &Error) -> Value {
    object([("error", object([("kind", e.kind().into()), ("message", e.to_string().into())]))])
}

/// Single-line JSON with a space after `:` and `,`.
pub fn to_compact(v: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Spaced);
    serde::Serialize::serialize(v, &mut ser).expect("values serialize");
    String::from_utf8(out).expect("JSON is UTF-8")
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

struct Spaced;

impl serde_json::ser::Formatter for Spaced {
    fn begin_array_value<W: ?Sized + std::io::Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + std::io::Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b": ")
    }
}
