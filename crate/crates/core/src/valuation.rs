//! Lowest-term valuations and the spaces of Plücker minors that span the
//! sections of line bundles attached to fundamental weights.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::{leading_row_minors, ExponentVector, PolyMatrix, Rational, SparsePolynomial, VariableOrder};
use crate::rootdata::{fundamental_weight, DominantWeight, Family};
use crate::schubertcell::{CellModel, FormSpec};
use crate::{Error, Result};

/// An exponent vector `v(f)`; entries may be negative for ratios.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ValuationPoint(pub Vec<i64>);

impl ValuationPoint {
    pub fn zero(d: usize) -> Self {
        ValuationPoint(vec![0; d])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn plus(&self, other: &ValuationPoint) -> ValuationPoint {
        ValuationPoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }
}

impl From<&ExponentVector> for ValuationPoint {
    fn from(e: &ExponentVector) -> Self {
        ValuationPoint(e.as_slice().iter().map(|&k| k as i64).collect())
    }
}

pub fn lowest_term_valuation(f: &SparsePolynomial, order: &VariableOrder) -> Result<ValuationPoint> {
    match f.lowest_term(order)? {
        Some((e, _)) => Ok(e.into()),
        None => Err(Error::UndefinedValuation),
    }
}

pub fn valuation_of_ratio(f: &SparsePolynomial, g: &SparsePolynomial, order: &VariableOrder) -> Result<ValuationPoint> {
    let a = lowest_term_valuation(f, order)?;
    let b = lowest_term_valuation(g, order)?;
    Ok(ValuationPoint(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect()))
}

/// The set `{v(f)}` over the given polynomials.
pub fn valuation_image(polys: &[SparsePolynomial], order: &VariableOrder) -> Result<BTreeSet<ValuationPoint>> {
    polys
        .par_iter()
        .map(|f| lowest_term_valuation(f, order))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// The set `v(V)` for the linear span `V` of the given polynomials, i.e. the
/// lowest exponents of a basis adapted to the valuation. Its size is `dim V`.
pub fn span_valuation_image(polys: &[SparsePolynomial], order: &VariableOrder) -> Result<BTreeSet<ValuationPoint>> {
    let mut basis: BTreeMap<ExponentVector, (SparsePolynomial, Rational)> = BTreeMap::new();
    for f in polys {
        let mut f = f.clone();
        while let Some((e, c)) = f.lowest_term(order)?.map(|(e, c)| (e.clone(), c.clone())) {
            match basis.get(&e) {
                Some((g, cg)) => f = f.sub(&g.scale(&(c / cg)))?,
                None => {
                    basis.insert(e, (f, c));
                    break;
                }
            }
        }
    }
    Ok(basis.keys().map(ValuationPoint::from).collect())
}

/// Sections of the line bundle of `weight`, as ratios `generators[i] / denominator`
/// of polynomials in the cell coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSpace {
    pub weight: DominantWeight,
    pub k: usize,
    pub generators: Vec<SparsePolynomial>,
    pub denominator: SparsePolynomial,
}

impl MinorSpace {
    /// Whether `weight` is twice the fundamental weight `k`; this happens
    /// for spin weights, whose sections are not minors themselves.
    pub fn is_doubled(&self) -> bool {
        self.weight.labels()[self.k - 1] == 2
    }
}

/// All maximal minors of a `k x n` matrix, sign-normalised and deduplicated.
fn normalised_minors(rows: &PolyMatrix, k: usize, order: &VariableOrder) -> Result<Vec<SparsePolynomial>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (_, m) in leading_row_minors(rows, k)? {
        let m = m.normalize_sign(order)?;
        if seen.insert(m.to_string()) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Sections for the fundamental weight `k`: the `k x k` minors of the first
/// `k` rows, divided by the unit minor on the last `k` columns.
///
/// For spin weights (type B, `k = r`; type D, `k = r-1, r`) these minors
/// span the sections of twice the fundamental weight, reported through
/// [`MinorSpace::weight`]. In type D the two half-spin families come from
/// the two maximal isotropic subspaces containing `V^{r-1}`: `V^r` itself
/// and the span of `V^{r-1}` with the other isotropic line of `V^{r+1}/V^{r-1}`.
pub fn minor_space(cell: &CellModel, k: usize) -> Result<MinorSpace> {
    let group = cell.group();
    let r = group.rank;
    let omega = fundamental_weight(group, k)?;
    let n = cell.n();
    let order = cell.order();
    let d = cell.d();
    let rows = cell.row_vectors();
    let spin = match group.family {
        Family::B => k == r,
        Family::D => k + 1 >= r,
        _ => false,
    };
    let weight = if spin { omega.scaled(2) } else { omega };
    let standard = |m: usize| -> Result<(Vec<SparsePolynomial>, SparsePolynomial)> {
        let top = PolyMatrix::from_rows(d, rows[..m].to_vec())?;
        Ok((normalised_minors(&top, m, order)?, SparsePolynomial::one(d)))
    };
    let (generators, denominator) = match group.family {
        Family::D if spin => {
            // The Plücker vector of V^r is taken to span the sections of 2 w_r and
            // the companion family those of 2 w_{r-1}; swapping the two labels is
            // the outer automorphism of D_r.
            let rows_family = r;
            if k == rows_family {
                standard(r)?
            } else {
                companion_space(cell)?
            }
        }
        _ => standard(k)?,
    };
    let generators = if generators.iter().any(|g| g.as_constant().is_some_and(|c| !c.is_zero())) {
        // The constant generator is the unit minor on the last k columns.
        generators
            .into_iter()
            .map(|g| match g.as_constant() {
                Some(c) if !c.is_zero() => SparsePolynomial::one(d),
                _ => g,
            })
            .collect()
    } else {
        generators
    };
    debug_assert!(n >= k);
    Ok(MinorSpace { weight, k, generators, denominator })
}

/// Minors of `[v_1; ...; v_{r-1}; w]` where `w = 2(v_r, v_{r+1}) v_{r+1} - (v_{r+1}, v_{r+1}) v_r`
/// is the second isotropic direction in `V^{r+1}` orthogonal to `V^{r-1}`.
/// The denominator is the minor that is nonzero at the base point.
fn companion_space(cell: &CellModel) -> Result<(Vec<SparsePolynomial>, SparsePolynomial)> {
    let group = cell.group();
    let r = group.rank;
    let n = cell.n();
    let d = cell.d();
    let order = cell.order();
    let form = FormSpec::for_group(group)?;
    let rows = cell.row_vectors();
    let (vr, vs) = (&rows[r - 1], &rows[r]);
    let a = form.pair(vr, vs)?.scale(&Rational::from_integer(2.into()));
    let b = form.pair(vs, vs)?;
    let w: Vec<SparsePolynomial> = vs.iter().zip(vr).map(|(x, y)| a.mul(x)?.sub(&b.mul(y)?)).collect::<Result<_>>()?;
    let mut m = rows[..r - 1].to_vec();
    m.push(w);
    let top = PolyMatrix::from_rows(d, m)?;
    let mut denominator = None;
    let mut generators = Vec::new();
    let mut seen = BTreeSet::new();
    for (_, minor) in leading_row_minors(&top, r)? {
        if denominator.is_none() && !minor.constant_term().is_zero() {
            denominator = Some(minor.clone());
        }
        let g = minor.normalize_sign(order)?;
        if seen.insert(g.to_string()) {
            generators.push(g);
        }
    }
    let denominator = denominator.ok_or_else(|| Error::Validation("no minor is nonzero at the base point".into()))?;
    debug_assert!(n == 2 * r);
    Ok((generators, denominator))
}

/// Limits on product enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductCap {
    pub max_degree: u32,
    pub max_products: u128,
}

impl Default for ProductCap {
    fn default() -> Self {
        ProductCap { max_degree: 6, max_products: 1_000_000 }
    }
}

/// All products taking one generator from each factor, where space `i` is
/// used `multiplicities[i]` times.
pub fn product_generators(
    spaces: &[MinorSpace],
    multiplicities: &[u32],
    cap: ProductCap,
) -> Result<Vec<SparsePolynomial>> {
    if spaces.len() != multiplicities.len() {
        return Err(Error::dim(spaces.len(), multiplicities.len()));
    }
    let degree: u32 = multiplicities.iter().sum();
    if degree > cap.max_degree {
        return Err(Error::Resource { what: "product degree", count: degree as u128, limit: cap.max_degree as u128 });
    }
    let mut count: u128 = 1;
    for (s, &m) in spaces.iter().zip(multiplicities) {
        count = count.saturating_mul((s.generators.len() as u128).saturating_pow(m));
    }
    if count > cap.max_products {
        return Err(Error::Resource { what: "generator products", count, limit: cap.max_products });
    }
    let nvars = spaces.first().map(|s| s.denominator.nvars()).unwrap_or(0);
    let mut acc = vec![SparsePolynomial::one(nvars)];
    for (s, &m) in spaces.iter().zip(multiplicities) {
        for _ in 0..m {
            acc = acc
                .par_iter()
                .flat_map_iter(|a| s.generators.iter().map(move |g| a.mul(g)))
                .collect::<Result<Vec<_>>>()?;
        }
    }
    Ok(acc)
}

/// Whether the lowest term of a minor equals the product of the lowest
/// terms of its diagonal entries.
pub fn minor_has_diagonal_lowest_term(cell: &CellModel, rows: &[usize], cols: &[usize]) -> Result<bool> {
    let sub = cell.entries().submatrix(rows, cols);
    let det = crate::exactalg::determinant(&sub)?;
    if det.is_zero() {
        return Ok(false);
    }
    let mut diag = ValuationPoint::zero(cell.d());
    for (&r, &c) in rows.iter().zip(cols) {
        let e = cell.entry(r, c);
        if e.is_zero() {
            return Ok(false);
        }
        diag = diag.plus(&lowest_term_valuation(e, cell.order())?);
    }
    Ok(lowest_term_valuation(&det, cell.order())? == diag)
}
