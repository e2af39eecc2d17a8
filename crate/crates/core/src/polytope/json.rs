//! JSON forms `{"dim": d, "vertices": [["p/q", ...], ...]}` and
//! `{"dim": d, "ineqs": [{"a": [...], "b": "p/q"}], "eqs": [...]}`.

use serde_json::{json, Value};

use super::{HPolytope, Inequality, Point, VPolytope};
use crate::exactalg::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

/// A polytope read from JSON in either description.
#[derive(Debug, Clone)]
pub enum JsonPolytope {
    V(VPolytope),
    H(HPolytope),
}

impl JsonPolytope {
    pub fn dim(&self) -> usize {
        match self {
            JsonPolytope::V(v) => v.dim(),
            JsonPolytope::H(h) => h.dim(),
        }
    }

    pub fn into_v(self) -> Result<VPolytope> {
        match self {
            JsonPolytope::V(v) => Ok(v),
            JsonPolytope::H(h) => super::h_to_v(&h),
        }
    }

    pub fn into_h(self) -> Result<HPolytope> {
        match self {
            JsonPolytope::V(v) => Ok(super::v_to_h(&v)),
            JsonPolytope::H(h) => h.canonical(),
        }
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn row_json(r: &Inequality) -> Value {
    json!({"a": rationals(&r.a), "b": format_rational(&r.b)})
}

pub(super) fn vpolytope_json(p: &VPolytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(|v| rationals(v)).collect::<Vec<_>>(),
    })
}

impl HPolytope {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim(),
            "ineqs": self.inequalities().iter().map(row_json).collect::<Vec<_>>(),
            "eqs": self.equations().iter().map(row_json).collect::<Vec<_>>(),
        })
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

fn rational_of(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(bad(format!("expected a rational string, found {other}"))),
    }
}

fn vector_of(v: &Value, dim: usize) -> Result<Point> {
    let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
    if arr.len() != dim {
        return Err(Error::dim(dim, arr.len()));
    }
    arr.iter().map(rational_of).collect()
}

fn rows_of(v: Option<&Value>, dim: usize) -> Result<Vec<Inequality>> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    let arr = v.as_array().ok_or_else(|| bad("expected an array of rows"))?;
    arr.iter()
        .map(|r| {
            let a = vector_of(r.get("a").ok_or_else(|| bad("row without \"a\""))?, dim)?;
            let b = rational_of(r.get("b").ok_or_else(|| bad("row without \"b\""))?)?;
            Ok(Inequality::new(a, b))
        })
        .collect()
}

pub fn parse_polytope_json(text: &str) -> Result<JsonPolytope> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing \"dim\""))? as usize;
    if let Some(verts) = v.get("vertices") {
        let arr = verts.as_array().ok_or_else(|| bad("\"vertices\" must be an array"))?;
        let pts: Vec<Point> = arr.iter().map(|p| vector_of(p, dim)).collect::<Result<_>>()?;
        return Ok(JsonPolytope::V(super::hull(&pts)?));
    }
    if v.get("ineqs").is_none() && v.get("eqs").is_none() {
        return Err(bad("expected \"vertices\" or \"ineqs\""));
    }
    let ineqs = rows_of(v.get("ineqs"), dim)?;
    let eqs = rows_of(v.get("eqs"), dim)?;
    Ok(JsonPolytope::H(HPolytope::new(dim, ineqs, eqs)?))
}
