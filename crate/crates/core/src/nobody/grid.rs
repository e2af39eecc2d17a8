//! Weight grids read from TOML and certified in parallel.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verdict, Pipeline, Verdict};
use crate::exactalg::format_rational;
use crate::patterns::{fflv_polytope, gz_polytope};
use crate::polytope::h_to_v;
use crate::rootdata::{DominantWeight, Family, GroupType};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReferenceKind {
    #[default]
    None,
    Fflv,
    Gz,
}

/// One block of weights. Weights are given by Dynkin labels: either all
/// vectors with entries in `labels`, the fundamental weights, or an
/// explicit list.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridCase {
    pub family: Family,
    pub ranks: Vec<usize>,
    #[serde(default)]
    pub labels: Option<Vec<u32>>,
    #[serde(default)]
    pub fundamental: bool,
    #[serde(default)]
    pub weights: Vec<Vec<u32>>,
    #[serde(default)]
    pub reference: ReferenceKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub title: String,
    #[serde(rename = "case")]
    pub cases: Vec<GridCase>,
}

impl GridConfig {
    pub fn from_toml(text: &str) -> Result<GridConfig> {
        toml::from_str(text)
            .map_err(|e| Error::Parse { pos: e.span().map_or(0, |s| s.start), msg: e.message().to_string() })
    }

    /// All (weight, reference) pairs in file order.
    pub fn expand(&self) -> Result<Vec<(DominantWeight, ReferenceKind)>> {
        let mut out = Vec::new();
        for case in &self.cases {
            for &rank in &case.ranks {
                let group = GroupType::new(case.family, rank)?;
                let mut labels: Vec<Vec<u32>> = Vec::new();
                if let Some(values) = &case.labels {
                    let mut cur = vec![Vec::new()];
                    for _ in 0..rank {
                        cur = cur
                            .into_iter()
                            .flat_map(|v: Vec<u32>| {
                                values.iter().map(move |&x| {
                                    let mut v = v.clone();
                                    v.push(x);
                                    v
                                })
                            })
                            .collect();
                    }
                    labels.extend(cur);
                }
                if case.fundamental {
                    labels.extend((0..rank).map(|k| (0..rank).map(|i| u32::from(i == k)).collect()));
                }
                labels.extend(case.weights.iter().filter(|w| w.len() == rank).cloned());
                for l in labels {
                    out.push((DominantWeight::from_labels(group, l)?, case.reference));
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub group: String,
    pub labels: Vec<u32>,
    pub lambda: String,
    pub image_dim: usize,
    /// The body is dilated by this before its lattice volume is taken.
    pub scale: u32,
    pub vertices: usize,
    pub lattice_volume: String,
    pub expected_degree: String,
    pub certified: bool,
    pub reference: ReferenceKind,
    pub verdict: Option<Verdict>,
    pub error: Option<String>,
}

impl GridRow {
    pub fn success(&self) -> bool {
        self.error.is_none() && self.certified && self.verdict.is_none_or(|v| v == Verdict::Equal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub title: String,
    pub rows: Vec<GridRow>,
}

impl GridReport {
    pub fn success(&self) -> bool {
        self.rows.iter().all(GridRow::success)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

impl fmt::Display for GridReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.title.is_empty() {
            writeln!(f, "{}", self.title)?;
        }
        writeln!(
            f,
            "{:<6} {:<12} {:<18} {:>4} {:>6} {:>2} {:>12} {:>12}  {:<9} {}",
            "group", "labels", "lambda", "dim", "verts", "c", "volume", "degree", "certified", "reference"
        )?;
        for r in &self.rows {
            let labels = format!("{:?}", r.labels);
            let reference = match (r.reference, r.verdict) {
                (ReferenceKind::None, _) => String::new(),
                (k, Some(v)) => format!("{}: {}", format!("{k:?}").to_lowercase(), v.as_str()),
                (k, None) => format!("{}: -", format!("{k:?}").to_lowercase()),
            };
            write!(
                f,
                "{:<6} {:<12} {:<18} {:>4} {:>6} {:>2} {:>12} {:>12}  {:<9} {}",
                r.group,
                labels,
                r.lambda,
                r.image_dim,
                r.vertices,
                r.scale,
                r.lattice_volume,
                r.expected_degree,
                r.certified,
                reference
            )?;
            if let Some(e) = &r.error {
                write!(f, " error: {e}")?;
            }
            writeln!(f)?;
        }
        let ok = self.rows.iter().filter(|r| r.success()).count();
        write!(f, "{ok}/{} succeeded", self.rows.len())
    }
}

fn row(pipeline: &Pipeline, w: &DominantWeight, reference: ReferenceKind) -> GridRow {
    let mut out = GridRow {
        group: w.group().to_string(),
        labels: w.labels().to_vec(),
        lambda: w.lambda_string(),
        image_dim: 0,
        scale: 1,
        vertices: 0,
        lattice_volume: String::new(),
        expected_degree: String::new(),
        certified: false,
        reference,
        verdict: None,
        error: None,
    };
    let mut run = || -> Result<()> {
        let res = pipeline.certify(w)?;
        out.image_dim = res.certificate.image_dim;
        out.scale = res.certificate.scale;
        out.vertices = res.body.vertices().len();
        out.lattice_volume = format_rational(&res.certificate.lattice_volume);
        out.expected_degree = res.certificate.expected.to_string();
        out.certified = res.certified;
        let h = match reference {
            ReferenceKind::None => return Ok(()),
            ReferenceKind::Fflv => fflv_polytope(w)?,
            ReferenceKind::Gz => gz_polytope(w)?,
        };
        out.verdict = Some(verdict(&res.body, &h_to_v(&h)?)?);
        Ok(())
    };
    if let Err(e) = run() {
        out.error = Some(e.to_string());
    }
    out
}

/// Certifies every grid weight; rows keep the order of [`GridConfig::expand`].
pub fn run_grid(pipeline: &Pipeline, config: &GridConfig) -> Result<GridReport> {
    let weights = config.expand()?;
    let rows = weights.par_iter().map(|(w, r)| row(pipeline, w, *r)).collect();
    Ok(GridReport { title: config.title.clone(), rows })
}
