//! JSON encoding for exact numbers.
//!
//! Integers that a double can hold exactly are written as JSON numbers;
//! anything larger is written as a decimal string so 64-bit consumers never
//! see a rounded value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

const SAFE_INTEGER: i64 = (1 << 53) - 1;

pub fn bigint(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.abs() <= SAFE_INTEGER => json!(x),
        _ => Value::String(v.to_string()),
    }
}

pub fn rational(v: &BigRational) -> Value {
    json!({ "num": bigint(v.numer()), "den": bigint(v.denom()) })
}

/// Inverse of [`bigint`]: accepts a JSON integer or a decimal string.
pub fn parse_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub fn is_safe(v: &BigInt) -> bool {
    v.abs() <= BigInt::from(SAFE_INTEGER)
}
