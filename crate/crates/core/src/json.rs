//! JSON encodings.
//!
//! Multivector: `{"p":2,"q":0,"coeffs":{"1,2":[1,0]}}` where each key lists
//! ascending generator indices (`""` is the scalar) and absent keys are zero.
//! Matrix dump: `{"dim":d,"entries":[[re,im],…]}` in row-major order.

use serde_json::{json, Map, Number, Value};

use crate::blade::BladeIndex;
use crate::matrix::ComplexMatrix;
use crate::{Complex, Error, Multivector, Result, Signature};

/// Integral values print as JSON integers (`1` rather than `1.0`).
fn number(x: f64) -> Value {
    if x == x.trunc() && x.abs() < 9.007_199_254_740_992e15 {
        Value::Number(Number::from(x as i64))
    } else {
        Number::from_f64(x).map_or(Value::Null, Value::Number)
    }
}

fn pair(c: Complex) -> Value {
    Value::Array(vec![number(c.re), number(c.im)])
}

pub fn multivector_to_value(u: &Multivector) -> Value {
    let coeffs: Map<String, Value> = u.terms().map(|(b, c)| (b.key(), pair(c))).collect();
    json!({ "p": u.sig().p(), "q": u.sig().q(), "coeffs": coeffs })
}

pub fn multivector_to_json(u: &Multivector) -> String {
    multivector_to_value(u).to_string()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn parse_pair(v: &Value) -> Result<Complex> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| bad("coefficient must be [re, im]"))?;
    let re = arr[0].as_f64().ok_or_else(|| bad("re must be a number"))?;
    let im = arr[1].as_f64().ok_or_else(|| bad("im must be a number"))?;
    let c = Complex::new(re, im);
    if !c.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(c)
}

fn parse_key(key: &str, sig: Signature) -> Result<BladeIndex> {
    if key.is_empty() {
        return Ok(BladeIndex::SCALAR);
    }
    let mut mask = 0u32;
    let mut last = 0usize;
    for part in key.split(',') {
        let a: usize = part
            .parse()
            .map_err(|_| bad(format!("bad blade key `{key}`")))?;
        if a <= last || a > sig.n() {
            return Err(bad(format!(
                "blade key `{key}` must list ascending indices in 1..={}",
                sig.n()
            )));
        }
        mask |= 1 << (a - 1);
        last = a;
    }
    Ok(BladeIndex(mask))
}

pub fn multivector_from_value(v: &Value) -> Result<Multivector> {
    let field = |name: &str| -> Result<usize> {
        v.get(name)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| bad(format!("missing or invalid `{name}`")))
    };
    let sig = Signature::new(field("p")?, field("q")?)?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing `coeffs` object"))?;
    let mut u = Multivector::zero(sig);
    for (key, value) in coeffs {
        u.set_coeff(parse_key(key, sig)?, parse_pair(value)?);
    }
    Ok(u)
}

pub fn multivector_from_json(text: &str) -> Result<Multivector> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    multivector_from_value(&v)
}

pub fn matrix_to_value(m: &ComplexMatrix) -> Value {
    json!({
        "dim": m.dim(),
        "entries": m.entries().iter().map(|&c| pair(c)).collect::<Vec<_>>(),
    })
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    matrix_to_value(m).to_string()
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing `dim`"))? as usize;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `entries`"))?
        .iter()
        .map(parse_pair)
        .collect::<Result<Vec<_>>>()?;
    ComplexMatrix::from_entries(dim, entries)
}

/// `[re, im]` for a scalar result.
pub fn complex_to_value(c: Complex) -> Value {
    pair(c)
}
