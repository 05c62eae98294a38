//! JSON forms: a Laurent polynomial is an object from decimal exponent
//! strings to integers (`{"-1":1,"2":3}` is `3q^2 + q^-1`); a rational
//! function is `{"num": .., "den": ..}`. Integers outside the `i64` range are
//! written as decimal strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{LaurentInt, RatFunc};

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            match c.to_i64() {
                Some(v) => m.serialize_entry(&e.to_string(), &v)?,
                None => m.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        m.end()
    }
}

fn bigint_from_value<E: de::Error>(v: &Value) -> Result<BigInt, E> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(E::custom("non-integer coefficient"))
            }
        }
        Value::String(s) => BigInt::from_str(s).map_err(|_| E::custom("bad integer string")),
        _ => Err(E::custom("coefficient must be an integer")),
    }
}

impl<'de> Deserialize<'de> for LaurentInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, Value> = BTreeMap::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (k, v) in raw {
            let e = k.parse::<i32>().map_err(|_| de::Error::custom(format!("bad exponent {k:?}")))?;
            terms.push((e, bigint_from_value::<D::Error>(&v)?));
        }
        Ok(LaurentInt::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: LaurentInt,
    den: LaurentInt,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_laurent() {
            self.num().serialize(s)
        } else {
            RatRepr { num: self.num().clone(), den: self.den().clone() }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        if let Value::Object(m) = &v {
            if m.len() == 2 && m.contains_key("num") && m.contains_key("den") {
                let r: RatRepr = serde_json::from_value(v).map_err(de::Error::custom)?;
                if r.den.is_zero() {
                    return Err(de::Error::custom("zero denominator"));
                }
                return Ok(RatFunc::new(r.num, r.den));
            }
        }
        let x: LaurentInt = serde_json::from_value(v).map_err(de::Error::custom)?;
        Ok(RatFunc::from_laurent(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_json_shape() {
        let x = LaurentInt::from_terms([(2, 3i64), (-1, 1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"-1":1,"2":3}"#);
        assert_eq!(serde_json::from_str::<LaurentInt>(&s).unwrap(), x);
        assert_eq!(serde_json::to_string(&LaurentInt::zero()).unwrap(), "{}");
    }

    #[test]
    fn huge_coefficients_roundtrip() {
        let big = BigInt::from(i64::MAX) * BigInt::from(1000);
        let x = LaurentInt::monomial(big, 4);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<LaurentInt>(&s).unwrap(), x);
    }

    #[test]
    fn ratfunc_json() {
        let r = RatFunc::new(LaurentInt::one(), LaurentInt::from_terms([(1, 1i64), (-1, -1)]));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), r);
        let p = RatFunc::from_int(7);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"0":7}"#);
    }
}
