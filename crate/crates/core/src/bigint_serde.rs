//! Decimal JSON numbers for arbitrary-precision integers.
//!
//! `serde_json` is built with `arbitrary_precision`, so a `Number` keeps its
//! digits verbatim and big coefficients survive a round trip.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

pub fn to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers")
}

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_number(x)
        .serialize(s)
        .map_err(|e| S::Error::custom(e.to_string()))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let n = Number::deserialize(d)?;
    BigInt::from_str(&n.to_string()).map_err(D::Error::custom)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_number).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .into_iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect()
    }
}
