//! Browser bindings: certify a weight, list the lattice points of its FFLV
//! or GZ polytope, and measure a polytope pasted as JSON.
//!
//! The `*_json` functions are plain Rust so they can be tested natively; the
//! exported wrappers only convert errors.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use flagbodies::exactalg::format_rational;
use flagbodies::nobody::Pipeline;
use flagbodies::patterns::{fflv_polytope, gz_lattice, gz_polytope};
use flagbodies::polytope::{f_vector, h_to_v, lattice_points, normalized_volume, parse_polytope_json, LatticeSpec};
use flagbodies::rootdata::{weyl_dim, DominantWeight, Family, GroupType};

/// Points beyond this are counted but not listed.
const MAX_LISTED: usize = 2000;

fn weight(family: &str, labels: &str) -> Result<DominantWeight, String> {
    let family: Family = family.parse().map_err(|e: flagbodies::Error| e.to_string())?;
    let labels: Vec<u32> = labels
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("not a label: {t:?}")))
        .collect::<Result<_, _>>()?;
    let group = GroupType::new(family, labels.len()).map_err(|e| e.to_string())?;
    DominantWeight::from_labels(group, labels).map_err(|e| e.to_string())
}

fn err(e: flagbodies::Error) -> String {
    e.to_string()
}

pub fn certify_json(family: &str, labels: &str) -> Result<String, String> {
    let w = weight(family, labels)?;
    let res = Pipeline::new().certify(&w).map_err(err)?;
    let c = &res.certificate;
    let out = json!({
        "weight": w.to_string(),
        "certified": res.certified,
        "vertices": res.body.vertices().len(),
        "f_vector": f_vector(&res.body),
        "scale": c.scale,
        "lattice_volume": format_rational(&c.lattice_volume),
        "expected_degree": c.expected.to_string(),
        "fflv_equal": res.fflv_equal,
        "warnings": res.warnings,
        "body": res.body.to_json(),
    });
    Ok(out.to_string())
}

pub fn pattern_points_json(kind: &str, family: &str, labels: &str) -> Result<String, String> {
    let w = weight(family, labels)?;
    let (h, lattice) = match kind {
        "fflv" => (fflv_polytope(&w).map_err(err)?, LatticeSpec::Standard),
        "gz" => (gz_polytope(&w).map_err(err)?, gz_lattice(&w)),
        other => return Err(format!("unknown polytope kind {other:?}")),
    };
    let pts = lattice_points(&h, lattice).map_err(err)?;
    let listed: Vec<Vec<String>> =
        pts.iter().take(MAX_LISTED).map(|p| p.iter().map(format_rational).collect()).collect();
    let out = json!({
        "weight": w.to_string(),
        "count": pts.len(),
        "weyl_dim": weyl_dim(&w).to_string(),
        "points": listed,
        "truncated": pts.len() > MAX_LISTED,
    });
    Ok(out.to_string())
}

pub fn measure_json(text: &str) -> Result<String, String> {
    let p = parse_polytope_json(text).map_err(err)?.into_v().map_err(err)?;
    let h = flagbodies::polytope::v_to_h(&p);
    let pts = lattice_points(&h, LatticeSpec::Standard).map_err(err)?;
    let out: Value = json!({
        "affine_dim": p.affine_dim(),
        "normalized_volume": format_rational(&normalized_volume(&p)),
        "f_vector": f_vector(&p),
        "lattice_points": pts.len(),
        "vertices": p.to_json()["vertices"].clone(),
        "facets": h_to_v(&h).map(|v| v.facets().len()).map_err(err)?,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn certify(family: &str, labels: &str) -> Result<String, JsError> {
    certify_json(family, labels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pattern_points(kind: &str, family: &str, labels: &str) -> Result<String, JsError> {
    pattern_points_json(kind, family, labels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn measure(text: &str) -> Result<String, JsError> {
    measure_json(text).map_err(|e| JsError::new(&e))
}
