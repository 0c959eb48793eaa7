//! JSON form of big integers: a number when the value fits in an `i64`,
//! otherwise a decimal string.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

pub fn to_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn from_value(v: &Value) -> std::result::Result<BigInt, String> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("non-integer entry {n}")),
        Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        other => Err(format!("unexpected entry {other}")),
    }
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_value(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_value(&Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_value).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Value>::deserialize(d)?.iter().map(from_value).collect::<Result<_, _>>().map_err(serde::de::Error::custom)
    }
}

pub mod pair {
    use super::*;

    pub fn serialize<S: Serializer>(x: &(BigInt, BigInt), s: S) -> Result<S::Ok, S::Error> {
        [to_value(&x.0), to_value(&x.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(BigInt, BigInt), D::Error> {
        let [a, b] = <[Value; 2]>::deserialize(d)?;
        let e = serde::de::Error::custom;
        Ok((from_value(&a).map_err(e)?, from_value(&b).map_err(e)?))
    }
}
