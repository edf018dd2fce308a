//! JSON encoding of big integers as bare number literals.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};
use serde_json::value::RawValue;

pub(crate) fn raw(n: &BigInt) -> Box<RawValue> {
    RawValue::from_string(n.to_string()).expect("decimal integer is a JSON literal")
}

pub(crate) fn serialize_triple<S: Serializer>(v: &[BigInt; 3], ser: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = ser.serialize_tuple(3)?;
    for x in v {
        t.serialize_element(&raw(x))?;
    }
    t.end()
}

pub(crate) fn deserialize_triple<'de, D: Deserializer<'de>>(de: D) -> Result<[BigInt; 3], D::Error> {
    let raws: Vec<Box<RawValue>> = Vec::deserialize(de)?;
    if raws.len() != 3 {
        return Err(D::Error::custom(format!("expected 3 integers, got {}", raws.len())));
    }
    let mut out: [BigInt; 3] = Default::default();
    for (slot, r) in out.iter_mut().zip(&raws) {
        *slot = r.get().trim().parse().map_err(|_| D::Error::custom(format!("not an integer: {}", r.get())))?;
    }
    Ok(out)
}

pub(crate) fn serialize_int<S: Serializer>(n: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&raw(n), ser)
}
