//! Exact rationals and their JSON/text encodings.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Normalized arbitrary-precision rational (`gcd(num, den) = 1`, `den > 0`).
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn sign(positive: bool) -> Rational {
    if positive {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `"p/q"`, with `q` omitted when it is 1.
pub fn to_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_text(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("not a rational: {text:?}"));
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => {
            (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
        }
        None => (text.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn big_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => {
            num.as_i64().map(BigInt::from).ok_or_else(|| Error::InvalidInput(format!("non-integer {num}")))
        }
        Value::String(s) => s.parse().map_err(|_| Error::InvalidInput(format!("non-integer {s:?}"))),
        other => Err(Error::InvalidInput(format!("expected integer, got {other}"))),
    }
}

/// `[numerator, denominator]`. Integers beyond 64 bits are written as strings.
pub fn to_json(r: &Rational) -> Value {
    Value::Array(vec![big_to_json(r.numer()), big_to_json(r.denom())])
}

/// Serde adapter writing a rational in its `[num, den]` form.
pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&to_json(r), s)
}

pub fn from_json(v: &Value) -> Result<Rational> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::InvalidInput(format!("expected [num, den], got {v}")))?;
    let num = big_from_json(&arr[0])?;
    let den = big_from_json(&arr[1])?;
    if !den.is_positive() {
        return Err(Error::InvalidInput("denominator must be positive".into()));
    }
    Ok(Rational::new(num, den))
}
