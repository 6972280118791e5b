//! JSON encoding of integers, vectors and the polytope vertex format
//! `{"vertices": [[int, ...], ...]}`.
//!
//! Integers that fit an `i64` are written as JSON numbers, larger ones as
//! decimal strings. Both forms are accepted on input.

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn int_to_json<T: Scalar>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn int_from_json<T: Scalar>(v: &Value) -> Option<T> {
    match v {
        Value::Number(n) => n.as_i64().map(T::from_int),
        Value::String(s) => T::from_str(s.trim()).ok(),
        _ => None,
    }
}

pub fn ints_to_json<T: Scalar>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn points_to_json<T: Scalar>(ps: &[Vec<T>]) -> Value {
    Value::Array(ps.iter().map(|p| ints_to_json(p)).collect())
}

pub(crate) fn serialize_ints<T: Scalar, S: Serializer>(xs: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&int_to_json(x))?;
    }
    seq.end()
}

pub(crate) fn deserialize_ints<'de, T: Scalar, D: Deserializer<'de>>(
    d: D,
) -> Result<Vec<T>, D::Error> {
    let raw = Vec::<Value>::deserialize(d)?;
    raw.iter()
        .map(|v| int_from_json(v).ok_or_else(|| D::Error::custom(format!("not an integer: {v}"))))
        .collect()
}

/// Serde adapter for `Vec<T>` fields.
pub mod ints {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(xs: &[T], s: S) -> Result<S::Ok, S::Error> {
        serialize_ints(xs, s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        deserialize_ints(d)
    }
}

/// Serde adapter for `Vec<Vec<T>>` fields.
pub mod points {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(ps: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
        points_to_json(ps).serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<Vec<T>>, D::Error> {
        let raw = Vec::<Vec<Value>>::deserialize(d)?;
        raw.iter()
            .map(|p| {
                p.iter()
                    .map(|v| {
                        int_from_json(v)
                            .ok_or_else(|| D::Error::custom(format!("not an integer: {v}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter for single scalar fields.
pub mod int {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
        int_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let v = Value::deserialize(d)?;
        int_from_json(&v).ok_or_else(|| D::Error::custom(format!("not an integer: {v}")))
    }
}

/// The vertex-list document consumed and produced by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct VertexDocument<T: Scalar> {
    #[serde(with = "points")]
    pub vertices: Vec<Vec<T>>,
}

pub fn parse_vertex_document<T: Scalar>(text: &str) -> Result<Vec<Vec<T>>> {
    let doc: VertexDocument<T> =
        serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(doc.vertices)
}

pub fn vertex_document<T: Scalar>(vertices: &[Vec<T>]) -> Value {
    serde_json::json!({ "vertices": points_to_json(vertices) })
}
