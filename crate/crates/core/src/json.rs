//! Polygon JSON documents: `{"scalar": "q5"|"f64", "vertices": [[x, y], ...]}`.
//!
//! Exact coordinates are strings in the canonical `P+Q*r5` form of
//! [`Q5`]'s `Display`, so a document written by [`polygon_to_json`] parses
//! back to the identical polygon and re-serializes to identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polygon::{convex_hull, ConvexPolygon, Point2};
use crate::scalar::{Scalar, F64, Q5};

/// Scalars that have a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonScalar for F64 {
    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(self.0)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_f64()
            .map(F64)
            .ok_or_else(|| Error::Json(format!("expected a number, found {v}")))
    }
}

impl JsonScalar for Q5 {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(s.parse()?),
            Value::Number(n) if n.is_i64() => Ok(Q5::from_i64(n.as_i64().unwrap())),
            _ => Err(Error::Json(format!(
                "expected an exact scalar string, found {v}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub scalar: String,
    pub vertices: Vec<[Value; 2]>,
}

pub fn point_to_json<S: JsonScalar>(p: &Point2<S>) -> Value {
    Value::Array(vec![p.x.to_json(), p.y.to_json()])
}

pub fn polygon_doc<S: JsonScalar>(poly: &ConvexPolygon<S>) -> PolygonDoc {
    PolygonDoc {
        scalar: S::NAME.to_string(),
        vertices: poly
            .vertices()
            .iter()
            .map(|v| [v.x.to_json(), v.y.to_json()])
            .collect(),
    }
}

pub fn polygon_to_json<S: JsonScalar>(poly: &ConvexPolygon<S>) -> Value {
    serde_json::to_value(polygon_doc(poly)).expect("polygon document serializes")
}

/// Parse a document of a known backend; the vertex list is re-canonicalized.
pub fn polygon_from_doc<S: JsonScalar>(doc: &PolygonDoc) -> Result<ConvexPolygon<S>> {
    if doc.scalar != S::NAME {
        return Err(Error::Json(format!(
            "expected scalar backend `{}`, document says `{}`",
            S::NAME,
            doc.scalar
        )));
    }
    let pts = doc
        .vertices
        .iter()
        .map(|[x, y]| Ok(Point2::new(S::from_json(x)?, S::from_json(y)?)))
        .collect::<Result<Vec<_>>>()?;
    convex_hull(&pts)
}

/// A polygon of either backend, as read from a document.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyPolygon {
    Q5(ConvexPolygon<Q5>),
    F64(ConvexPolygon<F64>),
}

impl AnyPolygon {
    pub fn to_json(&self) -> Value {
        match self {
            AnyPolygon::Q5(p) => polygon_to_json(p),
            AnyPolygon::F64(p) => polygon_to_json(p),
        }
    }
}

/// Parse JSON text. Syntax and schema problems are [`Error::Json`]; a
/// well-formed but degenerate vertex set is [`Error::Degenerate`].
pub fn parse_polygon(text: &str) -> Result<AnyPolygon> {
    let doc: PolygonDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    match doc.scalar.as_str() {
        "q5" => polygon_from_doc(&doc).map(AnyPolygon::Q5),
        "f64" => polygon_from_doc(&doc).map(AnyPolygon::F64),
        other => Err(Error::Json(format!("unknown scalar backend `{other}`"))),
    }
}
