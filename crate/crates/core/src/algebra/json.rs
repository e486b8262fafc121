//! JSON codecs for the algebra types.
//!
//! Wire shapes:
//! - weight polynomial: `[{"coeff": "<decimal>", "vars": [[k, n, exp], ...]}, ...]`
//!   sorted by monomial order;
//! - ring element: the polynomial array in symbolic mode, the string
//!   `"num/den"` in numeric mode;
//! - coefficient table:
//!   `{"p": int, "mode": "symbolic"|"numeric", "window": [lo, hi],
//!     "values": [[k, n, "num/den"], ...]}`
//!   plus an optional `"shape": "bidiagonal"`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{
    BigRational, CoeffMode, CoeffTable, Monomial, RingElement, TableShape, VariableId, WeightPoly,
};
use crate::error::{CoreError, Result};

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(num.trim())
        .map_err(|_| CoreError::domain(format!("bad rational numerator {num:?}")))?;
    let denom = BigInt::from_str(den.trim())
        .map_err(|_| CoreError::domain(format!("bad rational denominator {den:?}")))?;
    if denom == BigInt::from(0) {
        return Err(CoreError::DivisionByZero);
    }
    Ok(BigRational::new(numer, denom))
}

pub fn weight_poly_to_json(p: &WeightPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let vars: Vec<Value> = m
                .factors()
                .iter()
                .map(|(v, e)| json!([v.diag, v.offset, e]))
                .collect();
            json!({"coeff": c.to_string(), "vars": vars})
        })
        .collect();
    Value::Array(terms)
}

pub fn weight_poly_from_json(v: &Value) -> Result<WeightPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| CoreError::domain("weight polynomial JSON must be an array"))?;
    let mut poly = WeightPoly::zero();
    for term in arr {
        let coeff = term
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| CoreError::domain("term missing \"coeff\" string"))?;
        let coeff = BigInt::from_str(coeff)
            .map_err(|_| CoreError::domain(format!("bad coefficient {coeff:?}")))?;
        let vars = term
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| CoreError::domain("term missing \"vars\" array"))?;
        let mut pairs = Vec::with_capacity(vars.len());
        for entry in vars {
            let triple = entry
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| CoreError::domain("var entry must be [k, n, exp]"))?;
            let k = triple[0]
                .as_u64()
                .ok_or_else(|| CoreError::domain("diagonal must be a nonnegative integer"))?;
            let n = triple[1]
                .as_i64()
                .ok_or_else(|| CoreError::domain("offset must be an integer"))?;
            let e = triple[2]
                .as_u64()
                .filter(|&e| e > 0)
                .ok_or_else(|| CoreError::domain("exponent must be positive"))?;
            let k =
                u8::try_from(k).map_err(|_| CoreError::domain("diagonal out of range"))?;
            let e = u32::try_from(e).map_err(|_| CoreError::domain("exponent too large"))?;
            pairs.push((VariableId::new(k, n), e));
        }
        poly.add_term(Monomial::from_pairs(pairs), coeff);
    }
    Ok(poly)
}

pub fn ring_element_to_json(r: &RingElement) -> Value {
    match r {
        RingElement::Symbolic(p) => weight_poly_to_json(p),
        RingElement::Numeric(q) => Value::String(rational_string(q)),
    }
}

pub fn ring_element_from_json(v: &Value) -> Result<RingElement> {
    match v {
        Value::String(s) => Ok(RingElement::Numeric(parse_rational(s)?)),
        Value::Array(_) => Ok(RingElement::Symbolic(weight_poly_from_json(v)?)),
        _ => Err(CoreError::domain(
            "ring element JSON must be an array (symbolic) or string (numeric)",
        )),
    }
}

pub fn table_to_json(t: &CoeffTable) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("p".into(), json!(t.p()));
    obj.insert("mode".into(), json!(t.mode().to_string()));
    if t.shape() == TableShape::Bidiagonal {
        obj.insert("shape".into(), json!("bidiagonal"));
    }
    if let Some((lo, hi)) = t.window() {
        obj.insert("window".into(), json!([lo, hi]));
    }
    if t.mode() == CoeffMode::Numeric {
        let values: Vec<Value> = t
            .values()
            .iter()
            .map(|(&(k, n), q)| json!([k, n, rational_string(q)]))
            .collect();
        obj.insert("values".into(), Value::Array(values));
    }
    Value::Object(obj)
}

pub fn table_from_json(v: &Value) -> Result<CoeffTable> {
    let p = v
        .get("p")
        .and_then(Value::as_u64)
        .ok_or_else(|| CoreError::domain("table JSON missing \"p\""))?;
    let p = u8::try_from(p).map_err(|_| CoreError::domain("p out of range"))?;
    let mode = v
        .get("mode")
        .and_then(Value::as_str)
        .ok_or_else(|| CoreError::domain("table JSON missing \"mode\""))?;
    let bidiagonal = v.get("shape").and_then(Value::as_str) == Some("bidiagonal");
    match mode {
        "symbolic" => Ok(if bidiagonal {
            CoeffTable::symbolic_bidiagonal(p)
        } else {
            CoeffTable::symbolic(p)
        }),
        "numeric" => {
            let window = v
                .get("window")
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| CoreError::domain("numeric table needs \"window\": [lo, hi]"))?;
            let lo = window[0]
                .as_i64()
                .ok_or_else(|| CoreError::domain("window bounds must be integers"))?;
            let hi = window[1]
                .as_i64()
                .ok_or_else(|| CoreError::domain("window bounds must be integers"))?;
            let entries = v
                .get("values")
                .and_then(Value::as_array)
                .ok_or_else(|| CoreError::domain("numeric table needs \"values\""))?;
            let mut values = BTreeMap::new();
            for entry in entries {
                let triple = entry
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| CoreError::domain("value entry must be [k, n, \"num/den\"]"))?;
                let k = triple[0]
                    .as_u64()
                    .and_then(|k| u8::try_from(k).ok())
                    .ok_or_else(|| CoreError::domain("bad diagonal in values"))?;
                let n = triple[1]
                    .as_i64()
                    .ok_or_else(|| CoreError::domain("bad offset in values"))?;
                let q = triple[2]
                    .as_str()
                    .ok_or_else(|| CoreError::domain("value must be a \"num/den\" string"))?;
                values.insert((k, n), parse_rational(q)?);
            }
            let table = CoeffTable::numeric(p, (lo, hi), values)?;
            if bidiagonal {
                let bad = table
                    .values()
                    .iter()
                    .find(|(&(k, _), q)| k < p && !num_traits::Zero::is_zero(*q));
                if let Some((&(k, n), _)) = bad {
                    return Err(CoreError::domain(format!(
                        "bidiagonal table has nonzero a_{n}^({k})"
                    )));
                }
            }
            Ok(table)
        }
        other => Err(CoreError::domain(format!("unknown table mode {other:?}"))),
    }
}
