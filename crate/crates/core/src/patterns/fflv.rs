//! FFLV polytopes of types A and C.
//!
//! Table entries are labelled by intervals `[a, b]` of simple roots of
//! `sl_N` (`N = n` in type A, `N = 2r` in type C, where the chain is folded
//! around its middle node). The entry `u^l_m` of the GZ table is the interval
//! `[m, m + l - 1]`. A Dyck path moves from `[a, b]` to `[a + 1, b]` or
//! `[a, b + 1]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::Rational;
use crate::polytope::{HPolytope, Inequality};
use crate::rootdata::{DominantWeight, Family, GroupType};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootInterval {
    pub a: usize,
    pub b: usize,
}

impl RootInterval {
    /// `(l, m)` of the table label `u^l_m`.
    pub fn label(&self) -> (usize, usize) {
        (self.b - self.a + 1, self.a)
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, m) = self.label();
        write!(f, "u^{l}_{m}")
    }
}

/// Where a path ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    /// Under `lambda_j` (type C: `j = r + 1` is the zero of the top row).
    Column(usize),
    /// Type C only: at the zero closing row `y^k` (`k = 0` is the top row),
    /// i.e. at the long root `[r - k, r + k]`.
    Zero(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    pub start: usize,
    pub end: PathEnd,
    pub cells: Vec<RootInterval>,
}

impl DyckPath {
    /// Right-hand side of the path inequality, `lambda_i - lambda_j` or `lambda_i`.
    pub fn bound(&self, labels: &[u32]) -> u64 {
        let stop = match self.end {
            PathEnd::Column(j) => j - 1,
            PathEnd::Zero(_) => labels.len(),
        };
        labels[self.start - 1..stop].iter().map(|&m| m as u64).sum()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", cells.join(", "))
    }
}

fn check_family(group: GroupType) -> Result<()> {
    match group.family {
        Family::A | Family::C => Ok(()),
        f => Err(Error::Unsupported(format!("FFLV polytopes are defined for types A and C, not {f}"))),
    }
}

fn allowed(group: GroupType, c: RootInterval) -> bool {
    let r = group.rank;
    match group.family {
        Family::A => 1 <= c.a && c.a <= c.b && c.b <= r,
        _ => 1 <= c.a && c.a <= r && c.a <= c.b && c.b <= 2 * r - c.a,
    }
}

/// Table entries in the order of the cell coordinates `y_1, ..., y_d`: the
/// matrix entry in row `i`, column `j` (1-based) is the interval `[i, N - j]`.
pub fn fflv_coordinates(group: GroupType) -> Result<Vec<RootInterval>> {
    check_family(group)?;
    let n = group.n();
    let mut out = Vec::with_capacity(group.flag_dim());
    for j in (1..n).rev() {
        for i in 1..=n - j {
            if group.family == Family::C && i > j {
                continue;
            }
            out.push(RootInterval { a: i, b: n - j });
        }
    }
    Ok(out)
}

/// All Dyck paths from the entry under `lambda_i, lambda_{i+1}` to `end`.
pub fn dyck_paths(group: GroupType, i: usize, end: PathEnd) -> Result<Vec<DyckPath>> {
    check_family(group)?;
    let r = group.rank;
    let target = match (group.family, end) {
        (_, PathEnd::Column(j)) => {
            if j > r + 1 {
                return Err(Error::Index { index: j, max: r + 1 });
            }
            RootInterval { a: j.saturating_sub(1), b: j.saturating_sub(1) }
        }
        (Family::C, PathEnd::Zero(k)) if k < r => RootInterval { a: r - k, b: r + k },
        (Family::C, PathEnd::Zero(k)) => return Err(Error::Index { index: k, max: r - 1 }),
        (_, PathEnd::Zero(_)) => return Err(Error::Unsupported("zero endpoints exist only in type C".into())),
    };
    if i == 0 || i > r {
        return Err(Error::Index { index: i, max: r });
    }
    if target.a < i {
        return Err(Error::Validation(format!("no path can start under lambda_{i} and end at {target}")));
    }
    let mut out = Vec::new();
    let mut cells = vec![RootInterval { a: i, b: i }];
    walk(group, target, &mut cells, &mut |cells| out.push(DyckPath { start: i, end, cells: cells.to_vec() }));
    Ok(out)
}

fn walk(group: GroupType, target: RootInterval, cells: &mut Vec<RootInterval>, emit: &mut dyn FnMut(&[RootInterval])) {
    let c = *cells.last().expect("nonempty path");
    if c == target {
        emit(cells);
        return;
    }
    for next in [RootInterval { a: c.a + 1, b: c.b }, RootInterval { a: c.a, b: c.b + 1 }] {
        if next.a <= target.a && next.b <= target.b && allowed(group, next) {
            cells.push(next);
            walk(group, target, cells, emit);
            cells.pop();
        }
    }
}

fn all_ends(group: GroupType, i: usize) -> Vec<PathEnd> {
    let r = group.rank;
    let mut ends: Vec<PathEnd> = (i + 1..=r + 1).map(PathEnd::Column).collect();
    if group.family == Family::C {
        // the top-row zero coincides with Column(r + 1)
        ends.extend((1..=r - i).map(PathEnd::Zero));
    }
    ends
}

/// `u >= 0` and `sum_{c in D} u_c <= bound(D)` for every Dyck path `D`, in
/// the cell coordinates.
pub fn fflv_polytope(w: &DominantWeight) -> Result<HPolytope> {
    let group = w.group();
    let coords = fflv_coordinates(group)?;
    let d = coords.len();
    let index: BTreeMap<RootInterval, usize> = coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut rows: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for i in 1..=group.rank {
        for end in all_ends(group, i) {
            for path in dyck_paths(group, i, end)? {
                let mut support: Vec<usize> = path.cells.iter().map(|c| index[c]).collect();
                support.sort_unstable();
                let b = path.bound(w.labels());
                rows.entry(support).and_modify(|x| *x = (*x).min(b)).or_insert(b);
            }
        }
    }
    let zero = || Rational::from_integer(0.into());
    let one = || Rational::from_integer(1.into());
    let mut ineqs = Vec::with_capacity(d + rows.len());
    for k in 0..d {
        let mut a = vec![zero(); d];
        a[k] = -one();
        ineqs.push(Inequality::new(a, zero()));
    }
    for (support, b) in rows {
        let mut a = vec![zero(); d];
        for k in support {
            a[k] = one();
        }
        ineqs.push(Inequality::new(a, Rational::from_integer(b.into())));
    }
    HPolytope::new(d, ineqs, Vec::new())
}

/// `lambda = sum m_k omega_k`: the pairs `(k, m_k)` with `m_k > 0`.
pub fn fflv_minkowski_decomposition(w: &DominantWeight) -> Result<Vec<(usize, u32)>> {
    check_family(w.group())?;
    Ok(w.labels().iter().enumerate().filter(|(_, &m)| m > 0).map(|(k, &m)| (k + 1, m)).collect())
}
