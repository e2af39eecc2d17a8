//! Exact rational polytopes.
//!
//! A [`VPolytope`] always carries both descriptions: its irredundant
//! vertices and its affine hull plus facet inequalities, together with the
//! vertex-facet incidences. Inequalities are stored as primitive integer
//! rows `a . x <= b`; on lower dimensional polytopes they only involve the
//! free coordinates of the affine hull, which makes them canonical.

mod dd;
mod faces;
mod json;
mod lattice;
pub(crate) mod linalg;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{format_rational, Rational};
use crate::{Error, Result};

use dd::{extreme_rays, Bits};
use linalg::{det_int, lcm_of_denominators, primitive_integer, rref, to_i128};

pub use faces::{combinatorially_equivalent, f_vector};
pub use json::{parse_polytope_json, JsonPolytope};
pub use lattice::{ehrhart_count, lattice_points};

pub type Point = Vec<Rational>;

/// The row `a . x <= b`, or `a . x = b` when used as an equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub a: Vec<Rational>,
    pub b: Rational,
}

impl Inequality {
    pub fn new(a: Vec<Rational>, b: Rational) -> Self {
        Inequality { a, b }
    }

    /// `b - a . x`; non-negative exactly when `x` satisfies the inequality.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        let ax: Rational = self.a.iter().zip(x).map(|(a, x)| a * x).sum();
        &self.b - ax
    }

    /// Rescaled so that `(a, b)` is a primitive integer vector.
    pub fn canonical(&self) -> Inequality {
        let mut all = self.a.clone();
        all.push(self.b.clone());
        if all.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let ints = primitive_integer(&all);
        let mut v: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        let b = v.pop().unwrap();
        Inequality { a: v, b }
    }

    fn canonical_equation(&self) -> Inequality {
        let c = self.canonical();
        match c.a.iter().find(|x| !x.is_zero()) {
            Some(lead) if lead.is_negative() => Inequality { a: c.a.iter().map(|x| -x).collect(), b: -c.b },
            _ => c,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.a.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            let abs = a.abs();
            let coef = if abs.is_one() { String::new() } else { format!("{}*", format_rational(&abs)) };
            if first {
                write!(f, "{}{coef}x{}", if a.is_negative() { "-" } else { "" }, i + 1)?;
            } else {
                write!(f, " {sign} {coef}x{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= {}", format_rational(&self.b))
    }
}

/// Inequality description `{x : a_i . x <= b_i, c_j . x = d_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    ineqs: Vec<Inequality>,
    eqs: Vec<Inequality>,
}

impl HPolytope {
    /// Rows are rescaled to primitive integers, deduplicated and sorted;
    /// rows `0 <= b` with `b >= 0` are dropped.
    pub fn new(dim: usize, ineqs: Vec<Inequality>, eqs: Vec<Inequality>) -> Result<Self> {
        for row in ineqs.iter().chain(&eqs) {
            if row.a.len() != dim {
                return Err(Error::dim(dim, row.a.len()));
            }
        }
        let ineqs: BTreeSet<Inequality> = ineqs
            .iter()
            .map(Inequality::canonical)
            .filter(|r| !(r.a.iter().all(Zero::is_zero) && !r.b.is_negative()))
            .collect();
        let eqs: BTreeSet<Inequality> = eqs
            .iter()
            .map(Inequality::canonical_equation)
            .filter(|r| !(r.a.iter().all(Zero::is_zero) && r.b.is_zero()))
            .collect();
        Ok(HPolytope { dim, ineqs: ineqs.into_iter().collect(), eqs: eqs.into_iter().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.ineqs
    }

    pub fn equations(&self) -> &[Inequality] {
        &self.eqs
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.ineqs.iter().all(|r| !r.slack(x).is_negative()) && self.eqs.iter().all(|r| r.slack(x).is_zero())
    }

    /// The polytope `k P`.
    pub fn scaled(&self, k: &Rational) -> HPolytope {
        let s = |r: &Inequality| Inequality { a: r.a.clone(), b: &r.b * k };
        HPolytope::new(self.dim, self.ineqs.iter().map(s).collect(), self.eqs.iter().map(s).collect())
            .expect("same dimension")
    }

    /// Irredundant form: the facets and affine hull of the vertex description.
    pub fn canonical(&self) -> Result<HPolytope> {
        Ok(v_to_h(&h_to_v(self)?))
    }
}

/// Affine hull `x_j = origin_j + sum_t m_{jt} (x_{free_t} - origin_{free_t})`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AffineHull {
    free: Vec<usize>,
    eqs: Vec<Inequality>,
}

fn affine_hull(points: &[Point]) -> AffineHull {
    let dim = points[0].len();
    let p0 = &points[0];
    let mut diffs: Vec<Point> = points[1..].iter().map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
    let free = if diffs.is_empty() { Vec::new() } else { rref(&mut diffs) };
    let mut eqs = Vec::new();
    for j in (0..dim).filter(|j| !free.contains(j)) {
        let mut a = vec![Rational::zero(); dim];
        a[j] = Rational::one();
        let mut b = p0[j].clone();
        for (t, &f) in free.iter().enumerate() {
            let m = &diffs[t][j];
            a[f] = -m.clone();
            b -= m * &p0[f];
        }
        eqs.push(Inequality { a, b }.canonical_equation());
    }
    eqs.sort();
    AffineHull { free, eqs }
}

/// Vertex description with its dual description attached.
#[derive(Debug, Clone)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Point>,
    hull: AffineHull,
    facets: Vec<Inequality>,
    /// For each facet, the vertices on it.
    incidence: Vec<Bits>,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

impl VPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in increasing lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Inequality] {
        &self.facets
    }

    /// Equations of the affine hull.
    pub fn equations(&self) -> &[Inequality] {
        &self.hull.eqs
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.hull.free.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim() == self.dim
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|r| !r.slack(x).is_negative()) && self.hull.eqs.iter().all(|r| r.slack(x).is_zero())
    }

    pub fn point(x: Point) -> VPolytope {
        hull(&[x]).expect("single point")
    }

    /// Vertices on each facet, as indices into [`VPolytope::vertices`].
    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        self.incidence.iter().map(|b| b.ones().collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json::vpolytope_json(self)
    }
}

/// Convex hull of finitely many points.
pub fn hull(points: &[Point]) -> Result<VPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::Validation("convex hull of no points".into()));
    };
    let dim = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::dim(dim, p.len()));
    }
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let hull = affine_hull(&pts);
    let e = hull.free.len();
    if e == 0 {
        return Ok(VPolytope { dim, vertices: pts, hull, facets: Vec::new(), incidence: Vec::new() });
    }
    let proj: Vec<Vec<Rational>> = pts.iter().map(|p| hull.free.iter().map(|&f| p[f].clone()).collect()).collect();
    let l = lcm_of_denominators(&proj.concat());
    let lr = Rational::from_integer(l.clone());
    let li = to_i128(&[l])?[0];
    let rows: Vec<Vec<i128>> = proj
        .iter()
        .map(|q| {
            let mut row = vec![li];
            for x in q {
                row.push(to_i128(&[(x * &lr).to_integer()])?[0]);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let rays = extreme_rays(&rows, e + 1)?;
    let mut facets: Vec<(Inequality, Bits)> = Vec::with_capacity(rays.len());
    for z in &rays {
        let mut a = vec![Rational::zero(); dim];
        for (t, &f) in hull.free.iter().enumerate() {
            a[f] = Rational::from_integer(BigInt::from(-z[t + 1]));
        }
        let ineq = Inequality { a, b: Rational::from_integer(BigInt::from(z[0])) };
        let mut tight = Bits::new(pts.len());
        for (i, row) in rows.iter().enumerate() {
            if linalg::dot_i128(row, z)? == 0 {
                tight.set(i);
            }
        }
        facets.push((ineq.canonical(), tight));
    }
    facets.sort_by(|x, y| x.0.cmp(&y.0));
    // A point is a vertex unless another point lies on every facet through it.
    let point_facets: Vec<Bits> = (0..pts.len())
        .map(|i| {
            let mut b = Bits::new(facets.len());
            for (fi, (_, t)) in facets.iter().enumerate() {
                if t.get(i) {
                    b.set(fi);
                }
            }
            b
        })
        .collect();
    let is_vertex: Vec<bool> = (0..pts.len())
        .map(|i| !(0..pts.len()).any(|j| j != i && point_facets[i].is_subset(&point_facets[j])))
        .collect();
    let index: Vec<Option<usize>> = {
        let mut next = 0;
        is_vertex
            .iter()
            .map(|&v| {
                v.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let nv = is_vertex.iter().filter(|&&v| v).count();
    let incidence: Vec<Bits> = facets
        .iter()
        .map(|(_, t)| {
            let mut b = Bits::new(nv);
            for i in t.ones() {
                if let Some(k) = index[i] {
                    b.set(k);
                }
            }
            b
        })
        .collect();
    let vertices: Vec<Point> = pts.into_iter().zip(&is_vertex).filter(|(_, &v)| v).map(|(p, _)| p).collect();
    Ok(VPolytope { dim, vertices, hull, facets: facets.into_iter().map(|(f, _)| f).collect(), incidence })
}

pub fn v_to_h(p: &VPolytope) -> HPolytope {
    HPolytope { dim: p.dim, ineqs: p.facets.clone(), eqs: p.hull.eqs.clone() }
}

/// Vertices of a bounded inequality system.
pub fn h_to_v(h: &HPolytope) -> Result<VPolytope> {
    let dim = h.dim;
    // Parametrise the solutions of the equations as x0 + N u.
    let mut aug: Vec<Vec<Rational>> = h
        .eqs
        .iter()
        .map(|r| {
            let mut row = r.a.clone();
            row.push(r.b.clone());
            row
        })
        .collect();
    let pivots = if aug.is_empty() { Vec::new() } else { rref(&mut aug) };
    if pivots.contains(&dim) {
        return Err(Error::Empty);
    }
    let mut x0 = vec![Rational::zero(); dim];
    for (row, &p) in aug.iter().zip(&pivots) {
        x0[p] = row[dim].clone();
    }
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Point> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &p) in aug.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    let f = basis.len();
    if f == 0 {
        return if h.contains_point(&x0) { hull(&[x0]) } else { Err(Error::Empty) };
    }
    // Homogenised cone {(t, u) : t >= 0, t (b - a.x0) - (a N) u >= 0}.
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(h.ineqs.len() + 1);
    let mut t_row = vec![0i128; f + 1];
    t_row[0] = 1;
    rows.push(t_row);
    for r in &h.ineqs {
        let mut row = vec![r.slack(&x0)];
        for v in &basis {
            let av: Rational = r.a.iter().zip(v).map(|(a, x)| a * x).sum();
            row.push(-av);
        }
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        rows.push(to_i128(&primitive_integer(&row))?);
    }
    let rays = extreme_rays(&rows, f + 1)?;
    let mut points = Vec::new();
    let mut recession = false;
    for z in rays {
        if z[0] == 0 {
            recession = true;
            continue;
        }
        let t = Rational::from_integer(BigInt::from(z[0]));
        let mut x = x0.clone();
        for (k, v) in basis.iter().enumerate() {
            let c = Rational::from_integer(BigInt::from(z[k + 1])) / &t;
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &c * vi;
            }
        }
        points.push(x);
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }
    if recession {
        return Err(Error::Unbounded);
    }
    hull(&points)
}

pub fn minkowski_sum(a: &VPolytope, b: &VPolytope) -> Result<VPolytope> {
    if a.dim != b.dim {
        return Err(Error::dim(a.dim, b.dim));
    }
    let mut pts = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for x in &a.vertices {
        for y in &b.vertices {
            pts.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    hull(&pts)
}

/// The polytope `k P` for a positive rational `k`.
pub fn scale(p: &VPolytope, k: &Rational) -> Result<VPolytope> {
    if !k.is_positive() {
        return Err(Error::Validation(format!("scale factor {} is not positive", format_rational(k))));
    }
    let s = |r: &Inequality| Inequality { a: r.a.clone(), b: &r.b * k };
    Ok(VPolytope {
        dim: p.dim,
        vertices: p.vertices.iter().map(|v| v.iter().map(|x| x * k).collect()).collect(),
        hull: AffineHull {
            free: p.hull.free.clone(),
            eqs: p.hull.eqs.iter().map(|r| s(r).canonical_equation()).collect(),
        },
        facets: p.facets.iter().map(|r| s(r).canonical()).collect(),
        incidence: p.incidence.clone(),
    })
}

pub fn dilate(p: &VPolytope, k: u32) -> Result<VPolytope> {
    if k == 0 {
        return Err(Error::Validation("dilation factor must be positive".into()));
    }
    scale(p, &Rational::from_integer(BigInt::from(k)))
}

/// `d!` times the Euclidean volume in the ambient space; zero for lower
/// dimensional polytopes.
pub fn normalized_volume(p: &VPolytope) -> Rational {
    if !p.is_full_dimensional() {
        return Rational::zero();
    }
    faces::simplex_volume_sum(p)
}

/// Normalised volume of `p` inside its affine hull, measured in the lattice
/// spanned by `basis` (rows). The basis must span the direction of the affine hull.
pub fn lattice_normalized_volume(p: &VPolytope, basis: &[Vec<BigInt>]) -> Result<Rational> {
    let e = p.affine_dim();
    if basis.len() != e {
        return Err(Error::Validation(format!("lattice of rank {} for a polytope of dimension {e}", basis.len())));
    }
    if e == 0 {
        return Ok(Rational::one());
    }
    let coords = lattice_coordinates(p, basis)?;
    Ok(normalized_volume(&hull(&coords)?))
}

/// Coordinates of the vertices of `p` relative to the first vertex in the given basis.
fn lattice_coordinates(p: &VPolytope, basis: &[Vec<BigInt>]) -> Result<Vec<Point>> {
    let e = basis.len();
    let dim = p.dim;
    let x0 = &p.vertices[0];
    let mut out = Vec::with_capacity(p.vertices.len());
    for v in &p.vertices {
        // Solve sum_t c_t basis_t = v - x0 via the augmented transposed system.
        let mut aug: Vec<Vec<Rational>> = (0..dim)
            .map(|j| {
                let mut row: Vec<Rational> = basis.iter().map(|b| Rational::from_integer(b[j].clone())).collect();
                row.push(&v[j] - &x0[j]);
                row
            })
            .collect();
        let pivots = rref(&mut aug);
        if pivots.contains(&e) || pivots.len() != e {
            return Err(Error::Validation("lattice basis does not span the affine hull".into()));
        }
        out.push((0..e).map(|t| aug[t][e].clone()).collect());
    }
    Ok(out)
}

/// Lattice spanned by the differences of the given integer points.
pub fn difference_lattice(points: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let Some(p0) = points.first() else {
        return Vec::new();
    };
    let gens: Vec<Vec<BigInt>> =
        points[1..].iter().map(|p| p.iter().zip(p0).map(|(a, b)| BigInt::from(a - b)).collect()).collect();
    linalg::lattice_basis(&gens)
}

/// Index of the lattice spanned by `basis` in the integer points of its
/// real span: the gcd of the maximal minors. 1 means the lattice is saturated.
pub fn saturation_index(basis: &[Vec<BigInt>]) -> Result<BigInt> {
    let e = basis.len();
    if e == 0 {
        return Ok(BigInt::one());
    }
    let dim = basis[0].len();
    let rows: Vec<Vec<i128>> = basis.iter().map(|b| to_i128(b)).collect::<Result<_>>()?;
    let mut g = BigInt::zero();
    let mut cols: Vec<usize> = (0..e).collect();
    loop {
        let sub: Vec<Vec<i128>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        g = g.gcd(&det_int(&sub));
        if g.is_one() {
            return Ok(g);
        }
        // next e-subset of 0..dim in lexicographic order
        let Some(t) = (0..e).rev().find(|&t| cols[t] < dim - e + t) else {
            break;
        };
        cols[t] += 1;
        for u in t + 1..e {
            cols[u] = cols[u - 1] + 1;
        }
    }
    Ok(g)
}

pub fn equals(a: &VPolytope, b: &VPolytope) -> Result<bool> {
    if a.dim != b.dim {
        return Err(Error::dim(a.dim, b.dim));
    }
    Ok(a.vertices == b.vertices)
}

/// Whether `b` is contained in `a`.
pub fn contains(a: &VPolytope, b: &VPolytope) -> Result<bool> {
    if a.dim != b.dim {
        return Err(Error::dim(a.dim, b.dim));
    }
    Ok(b.vertices.iter().all(|v| a.contains_point(v)))
}

/// Which lattice points are counted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LatticeSpec {
    /// `Z^d`.
    #[default]
    Standard,
    /// GZ points of types B and D: coordinates listed in `half` range over `Z/2`, the
    /// others over `Z`, or over `Z + 1/2` when `shifted` (half-integral weights).
    HalfInteger { half: Vec<usize>, shifted: bool },
}

/// Integer scaling that clears all vertex denominators (used by volumes).
pub(crate) fn integer_vertices(p: &VPolytope, coords: &[usize]) -> (Vec<Vec<i128>>, BigInt) {
    let proj: Vec<Rational> = p.vertices.iter().flat_map(|v| coords.iter().map(move |&c| v[c].clone())).collect();
    let l = lcm_of_denominators(&proj);
    let lr = Rational::from_integer(l.clone());
    let pts = p
        .vertices
        .iter()
        .map(|v| {
            coords
                .iter()
                .map(|&c| {
                    let x = (&v[c] * &lr).to_integer();
                    i128::try_from(x).expect("vertex coordinates fit in i128")
                })
                .collect()
        })
        .collect();
    (pts, l)
}

pub(crate) fn det_abs(rows: &[Vec<i128>]) -> BigInt {
    det_int(rows).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    pub(crate) fn pt(v: &[i64]) -> Point {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn ineq(a: &[i64], b: i64) -> Inequality {
        Inequality::new(pt(a), rat(b))
    }

    #[test]
    fn square_hull() {
        let p = hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1]), pt(&[1, 1])]).unwrap();
        assert_eq!(p.vertices(), &[pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])]);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(normalized_volume(&p), rat(2));
    }

    #[test]
    fn interior_points_dropped() {
        let p = hull(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2]), pt(&[1, 1]), pt(&[0, 1]), pt(&[1, 0])]).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(normalized_volume(&p), rat(4));
    }

    #[test]
    fn single_point_and_empty_input() {
        let p = VPolytope::point(pt(&[3, -1]));
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.affine_dim(), 0);
        assert_eq!(p.equations().len(), 2);
        assert!(matches!(hull(&[]), Err(Error::Validation(_))));
        assert!(matches!(hull(&[pt(&[1]), pt(&[1, 2])]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn unit_segment() {
        let p = hull(&[pt(&[0]), pt(&[1])]).unwrap();
        let h = v_to_h(&p);
        assert_eq!(h.inequalities(), &[ineq(&[-1], 0), ineq(&[1], 1)]);
        assert_eq!(h_to_v(&h).unwrap(), p);
    }

    #[test]
    fn simplex_facets_and_volume() {
        for d in 1..=6 {
            let mut pts = vec![vec![rat(0); d]];
            for i in 0..d {
                let mut e = vec![rat(0); d];
                e[i] = rat(1);
                pts.push(e);
            }
            let s = hull(&pts).unwrap();
            assert_eq!(s.facets().len(), d + 1);
            assert_eq!(normalized_volume(&s), rat(1));
        }
    }

    #[test]
    fn lower_dimensional_canonical_form() {
        // segment from (0,0,1) to (1,1,1)
        let p = hull(&[pt(&[0, 0, 1]), pt(&[1, 1, 1])]).unwrap();
        assert_eq!(p.affine_dim(), 1);
        assert_eq!(p.equations(), &[ineq(&[0, 0, 1], 1), ineq(&[1, -1, 0], 0)]);
        assert_eq!(p.facets(), &[ineq(&[-1, 0, 0], 0), ineq(&[1, 0, 0], 1)]);
        assert_eq!(normalized_volume(&p), rat(0));
        let h = v_to_h(&p);
        assert_eq!(h_to_v(&h).unwrap(), p);
    }

    #[test]
    fn h_to_v_errors() {
        let unbounded = HPolytope::new(2, vec![ineq(&[-1, 0], 0), ineq(&[0, -1], 0)], vec![]).unwrap();
        assert_eq!(h_to_v(&unbounded), Err(Error::Unbounded));
        let empty = HPolytope::new(1, vec![ineq(&[1], 0), ineq(&[-1], -1)], vec![]).unwrap();
        assert_eq!(h_to_v(&empty), Err(Error::Empty));
        let line = HPolytope::new(2, vec![ineq(&[1, 0], 1)], vec![]).unwrap();
        assert_eq!(h_to_v(&line), Err(Error::Unbounded));
    }

    #[test]
    fn rational_vertices() {
        let h = HPolytope::new(2, vec![ineq(&[-1, 0], 0), ineq(&[0, -1], 0), ineq(&[2, 2], 1)], vec![]).unwrap();
        let v = h_to_v(&h).unwrap();
        assert_eq!(v.vertices(), &[pt(&[0, 0]), vec![rat(0), ratio(1, 2)], vec![ratio(1, 2), rat(0)]]);
        assert_eq!(normalized_volume(&v), ratio(1, 4));
    }

    #[test]
    fn minkowski_and_dilation() {
        let seg_x = hull(&[pt(&[0, 0]), pt(&[1, 0])]).unwrap();
        let seg_y = hull(&[pt(&[0, 0]), pt(&[0, 1])]).unwrap();
        let sq = minkowski_sum(&seg_x, &seg_y).unwrap();
        assert_eq!(sq.vertices().len(), 4);
        let origin = VPolytope::point(pt(&[0, 0]));
        assert_eq!(minkowski_sum(&sq, &origin).unwrap(), sq);
        let big = dilate(&sq, 2).unwrap();
        assert_eq!(big, hull(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2]), pt(&[2, 2])]).unwrap());
        assert_eq!(big.facets(), hull(big.vertices()).unwrap().facets());
        assert_eq!(dilate(&sq, 1).unwrap(), sq);
        assert!(minkowski_sum(&sq, &VPolytope::point(pt(&[0]))).is_err());
    }

    #[test]
    fn containment() {
        let sq = hull(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2]), pt(&[2, 2])]).unwrap();
        let tri = hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert!(contains(&sq, &tri).unwrap());
        assert!(!contains(&tri, &sq).unwrap());
        assert!(equals(&sq, &sq).unwrap());
    }

    #[test]
    fn lattice_volume_of_sublattice_polytope() {
        // 2 * standard triangle: volume 4 in the root lattice, but these
        // differences only reach points with even last coordinate
        let p = hull(&[pt(&[2, 0, 0]), pt(&[0, 2, 0]), pt(&[0, 0, 2])]).unwrap();
        let lat = difference_lattice(&[vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        assert_eq!(lat.len(), 2);
        assert_eq!(lattice_normalized_volume(&p, &lat).unwrap(), rat(2));
        let root = difference_lattice(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(lattice_normalized_volume(&p, &root).unwrap(), rat(4));
        assert_eq!(saturation_index(&lat).unwrap(), BigInt::from(2));
        assert!(saturation_index(&root).unwrap().is_one());
        let coarse = difference_lattice(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        assert_eq!(saturation_index(&coarse).unwrap(), BigInt::from(4));
        assert_eq!(lattice_normalized_volume(&p, &coarse).unwrap(), rat(1));
    }
}
