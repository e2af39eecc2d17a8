//! Newton-Okounkov bodies of flag varieties from lowest-term valuations.
//!
//! For a fundamental weight the body is the hull of the valuations of its
//! Plücker sections; for `lambda = sum m_k omega_k` the Minkowski sum
//! `sum m_k P_k` is a lower bound, and it is the whole body once its volume
//! equals the degree of the projective embedding.

mod grid;

pub use grid::{run_grid, GridCase, GridConfig, GridReport, GridRow, ReferenceKind};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exactalg::{format_rational, Rational, SparsePolynomial};
use crate::patterns::fflv_polytope;
use crate::polytope::{
    contains, dilate, ehrhart_count, equals, f_vector, h_to_v, hull, lattice_normalized_volume, linalg, minkowski_sum,
    normalized_volume, saturation_index, scale, v_to_h, HPolytope, LatticeSpec, VPolytope,
};
use crate::rootdata::{degree_oracle, projective_degree, weyl_dim, DominantWeight, Family, GroupType};
use crate::schubertcell::{build_cell, CellModel};
use crate::valuation::{lowest_term_valuation, minor_space, span_valuation_image, MinorSpace, ValuationPoint};
use crate::{Error, Result};

/// Valuation data of one fundamental weight.
#[derive(Debug, Clone)]
pub struct Fundamental {
    pub space: MinorSpace,
    /// `v(V)` for the span `V` of the sections of `space.weight`.
    pub points: Vec<ValuationPoint>,
    /// Hull of `points`; a body for `space.weight`.
    pub hull: VPolytope,
    /// The body for the fundamental weight itself (half of `hull` when the
    /// space is doubled).
    pub body: VPolytope,
}

struct GroupData {
    cell: CellModel,
    fundamentals: Vec<OnceLock<Result<Arc<Fundamental>>>>,
}

type Slot = Arc<OnceLock<Result<Arc<GroupData>>>>;

/// Caches cells and fundamental bodies per group; safe to share across threads.
pub struct Pipeline {
    groups: Mutex<HashMap<GroupType, Slot>>,
    /// Ehrhart counts are skipped when the expected count exceeds this.
    pub max_lattice_points: u64,
}

impl Default for Pipeline {
    fn default() -> Self {
        Pipeline::new()
    }
}

/// Volume comparison that decides whether the lower bound is the body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeCertificate {
    /// The body is scaled by this (2 when a spin weight occurs) so that all
    /// vertices are lattice points.
    pub scale: u32,
    /// Dimension of the image of the flag variety under the weight.
    pub image_dim: usize,
    pub body_dim: usize,
    /// Normalised volume of the scaled body in the lattice spanned by its
    /// valuation points.
    pub lattice_volume: Rational,
    /// Degree of the image for the scaled weight.
    pub expected: BigUint,
    /// Index of that lattice in its saturation.
    pub saturation_index: BigInt,
}

impl VolumeCertificate {
    pub fn holds(&self) -> bool {
        self.body_dim == self.image_dim
            && self.saturation_index.is_one()
            && self.lattice_volume == Rational::from_integer(BigInt::from(self.expected.clone()))
    }
}

#[derive(Debug, Clone)]
pub struct NOBodyResult {
    pub weight: DominantWeight,
    /// `sum m_k P_k`; the body itself when `certified`.
    pub body: VPolytope,
    pub certified: bool,
    /// Ambient normalised volume of `body`.
    pub normalized_volume: Rational,
    /// Ambient degree (`d!` times the leading Hilbert coefficient).
    pub degree: BigUint,
    pub certificate: VolumeCertificate,
    /// Equality with the FFLV polytope (types A and C).
    pub fflv_equal: Option<bool>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    /// The body is a proper subset of the reference.
    BodyInsideReference,
    /// The reference is a proper subset of the body.
    ReferenceInsideBody,
    Incomparable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::BodyInsideReference => "body-inside-reference",
            Verdict::ReferenceInsideBody => "reference-inside-body",
            Verdict::Incomparable => "incomparable",
        }
    }
}

pub fn verdict(body: &VPolytope, reference: &VPolytope) -> Result<Verdict> {
    if equals(body, reference)? {
        return Ok(Verdict::Equal);
    }
    Ok(match (contains(reference, body)?, contains(body, reference)?) {
        (true, _) => Verdict::BodyInsideReference,
        (_, true) => Verdict::ReferenceInsideBody,
        _ => Verdict::Incomparable,
    })
}

#[derive(Debug, Clone)]
pub struct EhrhartRow {
    pub k: u32,
    pub body: Option<u64>,
    pub reference: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub ehrhart: Vec<EhrhartRow>,
    pub body_f_vector: Vec<usize>,
    pub reference_f_vector: Vec<usize>,
    pub body_facets: HPolytope,
}

#[derive(Debug, Clone)]
pub struct CertificationReport {
    pub result: NOBodyResult,
    /// Name and H-description of the reference polytope.
    pub reference: Option<(String, HPolytope)>,
    pub verdict: Option<Verdict>,
    pub diagnostics: Option<Diagnostics>,
}

impl Pipeline {
    pub fn new() -> Pipeline {
        Pipeline { groups: Mutex::new(HashMap::new()), max_lattice_points: 300_000 }
    }

    fn group(&self, group: GroupType) -> Result<Arc<GroupData>> {
        let slot = {
            let mut map = self.groups.lock().expect("pipeline cache poisoned");
            map.entry(group).or_default().clone()
        };
        slot.get_or_init(|| {
            let cell = build_cell(group)?;
            let fundamentals = (0..group.rank).map(|_| OnceLock::new()).collect();
            Ok(Arc::new(GroupData { cell, fundamentals }))
        })
        .clone()
    }

    pub fn cell(&self, group: GroupType) -> Result<CellModel> {
        Ok(self.group(group)?.cell.clone())
    }

    pub fn fundamental(&self, group: GroupType, k: usize) -> Result<Arc<Fundamental>> {
        if k == 0 || k > group.rank {
            return Err(Error::Index { index: k, max: group.rank });
        }
        let data = self.group(group)?;
        data.fundamentals[k - 1]
            .get_or_init(|| {
                let space = minor_space(&data.cell, k)?;
                // v(f / g) = v(f) - v(g)
                let shift = lowest_term_valuation(&space.denominator, data.cell.order())?;
                let points: Vec<ValuationPoint> = span_valuation_image(&space.generators, data.cell.order())?
                    .into_iter()
                    .map(|p| ValuationPoint(p.coords().iter().zip(shift.coords()).map(|(a, b)| a - b).collect()))
                    .collect();
                let hull = hull(&points.iter().map(|p| p.to_rationals()).collect::<Vec<_>>())?;
                let body =
                    if space.is_doubled() { scale(&hull, &Rational::new(1.into(), 2.into()))? } else { hull.clone() };
                Ok(Arc::new(Fundamental { space, points, hull, body }))
            })
            .clone()
    }

    pub fn fundamental_body(&self, group: GroupType, k: usize) -> Result<VPolytope> {
        Ok(self.fundamental(group, k)?.body.clone())
    }

    /// `sum m_k P_k`.
    pub fn lower_bound(&self, w: &DominantWeight) -> Result<VPolytope> {
        let group = w.group();
        let mut acc = VPolytope::point(vec![Rational::zero(); group.flag_dim()]);
        for (k, &m) in w.labels().iter().enumerate() {
            if m > 0 {
                acc = minkowski_sum(&acc, &dilate(&self.fundamental_body(group, k + 1)?, m)?)?;
            }
        }
        Ok(acc)
    }

    pub fn certify(&self, w: &DominantWeight) -> Result<NOBodyResult> {
        let group = w.group();
        let body = self.lower_bound(w)?;
        let mut warnings = Vec::new();
        let mut spin = false;
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for (k, &m) in w.labels().iter().enumerate() {
            if m == 0 {
                continue;
            }
            let f = self.fundamental(group, k + 1)?;
            spin |= f.space.is_doubled();
            let p0 = f.points[0].coords();
            gens.extend(
                f.points[1..].iter().map(|p| p.coords().iter().zip(p0).map(|(a, b)| BigInt::from(a - b)).collect()),
            );
        }
        let c: u32 = if spin { 2 } else { 1 };
        let scaled = dilate(&body, c)?;
        let lattice = linalg::lattice_basis(&gens);
        let (image_dim, expected) = projective_degree(&w.scaled(c));
        let body_dim = body.affine_dim();
        let lattice_volume = if lattice.len() == body_dim {
            lattice_normalized_volume(&scaled, &lattice)?
        } else {
            warnings
                .push(format!("valuation lattice has rank {} but the body has dimension {body_dim}", lattice.len()));
            Rational::zero()
        };
        let certificate = VolumeCertificate {
            scale: c,
            image_dim,
            body_dim,
            lattice_volume,
            expected,
            saturation_index: saturation_index(&lattice)?,
        };
        if !w.is_regular() {
            warnings.push(format!(
                "weight is not regular: the body has dimension {image_dim} < {} and is certified by its intrinsic volume",
                group.flag_dim()
            ));
        }
        if !certificate.saturation_index.is_one() {
            warnings.push(format!("valuation lattice has index {} in its saturation", certificate.saturation_index));
        }
        let certified = certificate.holds();
        if !certified {
            warnings.push("volume is below the degree: the body is only a lower bound".into());
        }
        let fflv_equal = match group.family {
            Family::A | Family::C => Some(equals(&body, &h_to_v(&fflv_polytope(w)?)?)?),
            _ => None,
        };
        Ok(NOBodyResult {
            weight: w.clone(),
            normalized_volume: normalized_volume(&body),
            degree: degree_oracle(w),
            body,
            certified,
            certificate,
            fflv_equal,
            warnings,
        })
    }

    fn ehrhart(&self, w: &DominantWeight, h: &HPolytope, k: u32) -> Result<Option<u64>> {
        let estimate = weyl_dim(&w.scaled(k)).to_u64().unwrap_or(u64::MAX);
        if estimate > self.max_lattice_points {
            return Ok(None);
        }
        Ok(Some(ehrhart_count(h, k, &LatticeSpec::Standard)?))
    }

    /// Certifies `w` and compares the body with `reference` (same coordinates).
    pub fn compare_with_reference(
        &self,
        w: &DominantWeight,
        name: &str,
        reference: &HPolytope,
    ) -> Result<CertificationReport> {
        let result = self.certify(w)?;
        if reference.dim() != result.body.dim() {
            return Err(Error::dim(result.body.dim(), reference.dim()));
        }
        let ref_v = h_to_v(reference)?;
        let v = verdict(&result.body, &ref_v)?;
        let body_h = v_to_h(&result.body);
        let mut ehrhart = Vec::new();
        for k in 1..=3 {
            ehrhart.push(EhrhartRow {
                k,
                body: self.ehrhart(w, &body_h, k)?,
                reference: self.ehrhart(w, reference, k)?,
            });
        }
        let diagnostics = Diagnostics {
            ehrhart,
            body_f_vector: f_vector(&result.body),
            reference_f_vector: f_vector(&ref_v),
            body_facets: body_h,
        };
        Ok(CertificationReport {
            result,
            reference: Some((name.to_string(), reference.canonical()?)),
            verdict: Some(v),
            diagnostics: Some(diagnostics),
        })
    }
}

pub fn fundamental_body(group: GroupType, k: usize) -> Result<VPolytope> {
    Pipeline::new().fundamental_body(group, k)
}

pub fn no_body_lower_bound(w: &DominantWeight) -> Result<VPolytope> {
    Pipeline::new().lower_bound(w)
}

pub fn certify(w: &DominantWeight) -> Result<NOBodyResult> {
    Pipeline::new().certify(w)
}

pub fn compare_with_reference(w: &DominantWeight, reference: &HPolytope) -> Result<CertificationReport> {
    Pipeline::new().compare_with_reference(w, "reference", reference)
}

/// Hull of the exponent vectors of the terms of `f`.
pub fn newton_polytope(f: &SparsePolynomial) -> Result<VPolytope> {
    if f.is_zero() {
        return Err(Error::Validation("the zero polynomial has no Newton polytope".into()));
    }
    let pts: Vec<Vec<Rational>> = f
        .terms()
        .map(|(e, _)| e.as_slice().iter().map(|&k| Rational::from_integer(BigInt::from(k))).collect())
        .collect();
    hull(&pts)
}

/// All coordinate permutations `s` with `{x_{s^-1}} : x in a} = b`, i.e.
/// coordinate `i` of `a` becomes coordinate `s[i]`.
pub fn matching_permutations(a: &VPolytope, b: &VPolytope) -> Result<Vec<Vec<usize>>> {
    if a.dim() != b.dim() {
        return Err(Error::dim(a.dim(), b.dim()));
    }
    let d = a.dim();
    let mut out = Vec::new();
    if a.vertices().len() != b.vertices().len() {
        return Ok(out);
    }
    let mut perm: Vec<usize> = (0..d).collect();
    permute(&mut perm, 0, &mut |s| {
        let mut moved: Vec<Vec<Rational>> = a
            .vertices()
            .iter()
            .map(|v| {
                let mut w = vec![Rational::zero(); d];
                for i in 0..d {
                    w[s[i]] = v[i].clone();
                }
                w
            })
            .collect();
        moved.sort();
        if moved == b.vertices() {
            out.push(s.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl NOBodyResult {
    pub fn to_json(&self) -> Value {
        let c = &self.certificate;
        json!({
            "group": self.weight.group().to_string(),
            "labels": self.weight.labels(),
            "lambda": rationals(&self.weight.lambda()),
            "certified": self.certified,
            "normalized_volume": format_rational(&self.normalized_volume),
            "degree": self.degree.to_string(),
            "certificate": {
                "scale": c.scale,
                "image_dim": c.image_dim,
                "body_dim": c.body_dim,
                "lattice_volume": format_rational(&c.lattice_volume),
                "expected_degree": c.expected.to_string(),
                "saturation_index": c.saturation_index.to_string(),
            },
            "fflv_equal": self.fflv_equal,
            "body": self.body.to_json(),
            "warnings": self.warnings,
        })
    }
}

impl CertificationReport {
    /// Whether the body is certified and, when a reference was given, equal to it.
    pub fn success(&self) -> bool {
        self.result.certified && self.verdict.is_none_or(|v| v == Verdict::Equal)
    }

    pub fn to_json(&self) -> Value {
        let diagnostics = self.diagnostics.as_ref().map(|d| {
            json!({
                "ehrhart": d.ehrhart.iter().map(|r| json!({"k": r.k, "body": r.body, "reference": r.reference})).collect::<Vec<_>>(),
                "body_f_vector": d.body_f_vector,
                "reference_f_vector": d.reference_f_vector,
                "body_facets": d.body_facets.to_json(),
            })
        });
        json!({
            "result": self.result.to_json(),
            "reference": self.reference.as_ref().map(|(name, h)| json!({"name": name, "polytope": h.to_json()})),
            "verdict": self.verdict.map(|v| v.as_str()),
            "diagnostics": diagnostics,
            "success": self.success(),
        })
    }
}
