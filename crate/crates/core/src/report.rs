//! JSON reports. Objects are `serde_json::Value` maps, whose keys serialize
//! in sorted order, so re-serializing a parsed report reproduces it exactly.
//! Rationals are written as `"p/q"` strings (`"p"` for integers).

use serde_json::{json, Value};

use crate::basis::{format_rational, parse_rational, BasisMatrix, SchurElement};
use crate::centre::CentreElement;
use crate::error::{Error, Result};
use crate::multiplication::EulerClass;

pub fn element_to_json(x: &SchurElement) -> Value {
    let terms: Vec<Value> = x
        .iter()
        .map(|(m, c)| json!({ "matrix": m.to_string(), "coefficient": format_rational(c) }))
        .collect();
    json!({ "n": x.n(), "d": x.d(), "terms": terms })
}

pub fn element_from_json(v: &Value) -> Result<SchurElement> {
    let field = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("missing field {name:?}")));
    let as_usize = |x: &Value| {
        x.as_u64()
            .map(|u| u as usize)
            .ok_or_else(|| Error::Parse("expected a nonnegative integer".into()))
    };
    let n = as_usize(field("n")?)?;
    let d = as_usize(field("d")?)?;
    let terms = field("terms")?
        .as_array()
        .ok_or_else(|| Error::Parse("terms must be an array".into()))?
        .iter()
        .map(|t| {
            let m: BasisMatrix = t
                .get("matrix")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term without matrix".into()))?
                .parse()?;
            let c = parse_rational(
                t.get("coefficient")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Parse("term without coefficient".into()))?,
            )?;
            Ok((m, c))
        })
        .collect::<Result<Vec<_>>>()?;
    SchurElement::from_terms(n, d, terms)
}

pub fn centre_element_to_json(z: &CentreElement) -> Value {
    json!({ "partition": z.partition.to_string(), "element": element_to_json(&z.element) })
}

pub fn euler_class_to_json(c: &EulerClass) -> Value {
    let entries: Vec<Value> = c
        .nonzero()
        .map(|(k, i, j, count)| json!({ "k": k, "i": i, "j": j, "count": count }))
        .collect();
    json!({
        "tensor": entries,
        "product_graph": c.product_graph().to_string(),
        "multiplicity": c.multiplicity(),
    })
}

/// Canonical text form of a report.
pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("Value always serializes")
}
