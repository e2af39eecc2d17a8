//! Lattice point enumeration by depth-first search over coordinates, with
//! each coordinate's range cut down by every inequality against the
//! bounding box of the remaining coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{h_to_v, HPolytope, LatticeSpec, Point};
use crate::exactalg::Rational;
use crate::{Error, Result};

struct Search {
    rows: Vec<(Vec<i128>, i128)>,
    lo: Vec<i128>,
    hi: Vec<i128>,
    /// `rest[r][j]`: minimum of `sum_{i > j} a_i x_i` over the box.
    rest: Vec<Vec<i128>>,
}

fn to_int(x: &Rational) -> Result<i128> {
    if !x.is_integer() {
        return Err(Error::Validation("inequality rows must be integral".into()));
    }
    x.to_integer().to_i128().ok_or(Error::Overflow)
}

impl Search {
    fn range(&self, j: usize, partial: &[i128]) -> Option<(i128, i128)> {
        let (mut lo, mut hi) = (self.lo[j], self.hi[j]);
        for (r, (a, b)) in self.rows.iter().enumerate() {
            let aj = a[j];
            let room = b - partial[r] - self.rest[r][j];
            if aj > 0 {
                hi = hi.min(Integer::div_floor(&room, &aj));
            } else if aj < 0 {
                lo = lo.max(Integer::div_ceil(&(-room), &(-aj)));
            } else if room < 0 {
                return None;
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn walk(&self, j: usize, x: &mut Vec<i128>, partial: &mut Vec<i128>, out: &mut Vec<Vec<i128>>) {
        let d = self.lo.len();
        if j == d {
            out.push(x.clone());
            return;
        }
        let Some((lo, hi)) = self.range(j, partial) else {
            return;
        };
        for v in lo..=hi {
            x.push(v);
            for (p, (a, _)) in partial.iter_mut().zip(&self.rows) {
                *p += a[j] * v;
            }
            self.walk(j + 1, x, partial, out);
            for (p, (a, _)) in partial.iter_mut().zip(&self.rows) {
                *p -= a[j] * v;
            }
            x.pop();
        }
    }
}

fn integer_points(h: &HPolytope) -> Result<Vec<Vec<i128>>> {
    let d = h.dim();
    let v = match h_to_v(h) {
        Ok(v) => v,
        Err(Error::Empty) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    if d == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut lo = vec![i128::MAX; d];
    let mut hi = vec![i128::MIN; d];
    for p in v.vertices() {
        for j in 0..d {
            lo[j] = lo[j].min(p[j].ceil().to_integer().to_i128().ok_or(Error::Overflow)?);
            hi[j] = hi[j].max(p[j].floor().to_integer().to_i128().ok_or(Error::Overflow)?);
        }
    }
    let mut rows = Vec::new();
    for r in h.inequalities() {
        rows.push((r.a.iter().map(to_int).collect::<Result<Vec<_>>>()?, to_int(&r.b)?));
    }
    for r in h.equations() {
        let a: Vec<i128> = r.a.iter().map(to_int).collect::<Result<_>>()?;
        let b = to_int(&r.b)?;
        rows.push((a.iter().map(|x| -x).collect(), -b));
        rows.push((a, b));
    }
    let rest = rows
        .iter()
        .map(|(a, _)| {
            let mut acc = vec![0i128; d];
            for j in (0..d - 1).rev() {
                let i = j + 1;
                acc[j] = acc[i] + (a[i] * lo[i]).min(a[i] * hi[i]);
            }
            acc
        })
        .collect();
    let search = Search { rows, lo, hi, rest };
    let zero = vec![0i128; search.rows.len()];
    let Some((first_lo, first_hi)) = search.range(0, &zero) else {
        return Ok(Vec::new());
    };
    // Slabs of the first coordinate are independent.
    let slabs: Vec<Vec<Vec<i128>>> = (first_lo..=first_hi)
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let mut x = vec![v];
            let mut partial: Vec<i128> = search.rows.iter().map(|(a, _)| a[0] * v).collect();
            search.walk(1, &mut x, &mut partial, &mut out);
            out
        })
        .collect();
    Ok(slabs.concat())
}

/// Lattice points of a bounded polytope, in lexicographic order.
pub fn lattice_points(h: &HPolytope, lattice: LatticeSpec) -> Result<Vec<Point>> {
    let to_point = |p: Vec<i128>, den: i64| -> Point {
        p.into_iter().map(|x| Rational::new(BigInt::from(x), BigInt::from(den))).collect()
    };
    match lattice {
        LatticeSpec::Standard => Ok(integer_points(h)?.into_iter().map(|p| to_point(p, 1)).collect()),
        LatticeSpec::HalfInteger { half, shifted } => {
            if let Some(&j) = half.iter().find(|&&j| j >= h.dim()) {
                return Err(Error::Index { index: j, max: h.dim() });
            }
            let parity = if shifted { 1 } else { 0 };
            let doubled = h.scaled(&Rational::from_integer(2.into()));
            let mut pts: Vec<Point> = integer_points(&doubled)?
                .into_iter()
                .filter(|p| p.iter().enumerate().all(|(j, x)| half.contains(&j) || x.rem_euclid(2) == parity))
                .map(|p| to_point(p, 2))
                .collect();
            pts.sort();
            Ok(pts)
        }
    }
}

/// Number of points of `lattice` in `k P`.
pub fn ehrhart_count(h: &HPolytope, k: u32, lattice: &LatticeSpec) -> Result<u64> {
    if k == 0 {
        return Ok(if h_to_v(h).is_ok() { 1 } else { 0 });
    }
    let scaled = h.scaled(&Rational::from_integer(BigInt::from(k)));
    Ok(lattice_points(&scaled, lattice.clone())?.len() as u64)
}
