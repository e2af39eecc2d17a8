//! Classical root data: group types, dominant weights, the Weyl dimension
//! formula and the degree of the flag variety embedding.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{format_rational, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Validation(format!("unknown group family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A classical group: `A_r = SL_{r+1}`, `B_r = SO_{2r+1}`, `C_r = Sp_{2r}`, `D_r = SO_{2r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::Validation(format!("{family} requires rank >= {min}, got {rank}")));
        }
        if rank > 8 {
            return Err(Error::Validation(format!("rank {rank} is beyond the supported range")));
        }
        Ok(GroupType { family, rank })
    }

    /// Size of the matrix the group acts on.
    pub fn n(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// Dimension of the flag variety, i.e. the number of positive roots.
    pub fn flag_dim(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
        }
    }

    /// Number of coordinates used for weights and roots.
    pub fn eps_len(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Positive roots in the orthogonal coordinates `e_1, ..., e_m`.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let m = self.eps_len();
        let unit = |i: usize, s: i64, j: Option<(usize, i64)>| {
            let mut v = vec![0i64; m];
            v[i] += s;
            if let Some((j, t)) = j {
                v[j] += t;
            }
            v
        };
        let mut roots = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                roots.push(unit(i, 1, Some((j, -1))));
                if self.family != Family::A {
                    roots.push(unit(i, 1, Some((j, 1))));
                }
            }
            match self.family {
                Family::B => roots.push(unit(i, 1, None)),
                Family::C => roots.push(unit(i, 2, None)),
                _ => {}
            }
        }
        roots
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Vec<Rational> {
        let mut rho = vec![Rational::zero(); self.eps_len()];
        for a in self.positive_roots() {
            for (r, x) in rho.iter_mut().zip(a) {
                *r += Rational::new(BigInt::from(x), BigInt::from(2));
            }
        }
        rho
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A dominant integral weight, stored by its coordinates `m_1, ..., m_r` in
/// the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    group: GroupType,
    labels: Vec<u32>,
}

impl DominantWeight {
    pub fn from_labels(group: GroupType, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != group.rank {
            return Err(Error::dim(group.rank, labels.len()));
        }
        Ok(DominantWeight { group, labels })
    }

    pub fn zero(group: GroupType) -> Self {
        DominantWeight { group, labels: vec![0; group.rank] }
    }

    /// Builds a weight from its integer orthogonal coordinates `(l_1 >= l_2 >= ...)`.
    ///
    /// Type A takes `rank + 1` entries and only their differences matter.
    /// Types B and C require all entries to be non-negative; type D requires
    /// `l_r >= 0`. Spin weights of types B and D have half-integral
    /// coordinates and are built with [`DominantWeight::from_labels`].
    pub fn from_lambda(group: GroupType, lambda: &[i64]) -> Result<Self> {
        if lambda.len() != group.eps_len() {
            return Err(Error::dim(group.eps_len(), lambda.len()));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Validation(format!("weight {lambda:?} is not non-increasing")));
        }
        let last = *lambda.last().expect("nonempty");
        if matches!(group.family, Family::B | Family::C | Family::D) && last < 0 {
            return Err(Error::Validation(format!("weight {lambda:?} has a negative entry")));
        }
        let r = group.rank;
        let diff = |i: usize| (lambda[i] - lambda[i + 1]) as u32;
        let labels: Vec<u32> = match group.family {
            Family::A => (0..r).map(diff).collect(),
            Family::C => (0..r).map(|i| if i + 1 < r { diff(i) } else { last as u32 }).collect(),
            Family::B => (0..r).map(|i| if i + 1 < r { diff(i) } else { 2 * last as u32 }).collect(),
            Family::D => (0..r)
                .map(|i| match i {
                    _ if i + 2 < r => diff(i),
                    _ if i + 2 == r => diff(i),
                    _ => (lambda[r - 2] + lambda[r - 1]) as u32,
                })
                .collect(),
        };
        Ok(DominantWeight { group, labels })
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&m| m == 0)
    }

    /// Regular weights pair positively with every positive root.
    pub fn is_regular(&self) -> bool {
        self.labels.iter().all(|&m| m > 0)
    }

    pub fn scaled(&self, k: u32) -> Self {
        DominantWeight { group: self.group, labels: self.labels.iter().map(|&m| m * k).collect() }
    }

    pub fn plus(&self, other: &DominantWeight) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Validation(format!("cannot add weights of {} and {}", self.group, other.group)));
        }
        Ok(DominantWeight {
            group: self.group,
            labels: self.labels.iter().zip(&other.labels).map(|(a, b)| a + b).collect(),
        })
    }

    /// Orthogonal coordinates; type A is normalised so that the last entry is 0.
    pub fn lambda(&self) -> Vec<Rational> {
        let r = self.group.rank;
        let m: Vec<Rational> = self.labels.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect();
        let half = |x: &Rational| x / Rational::from_integer(BigInt::from(2));
        let tail = |i: usize, end: usize| -> Rational { m[i..end].iter().sum() };
        match self.group.family {
            Family::A => (0..=r).map(|i| tail(i, r)).collect(),
            Family::C => (0..r).map(|i| tail(i, r)).collect(),
            Family::B => (0..r).map(|i| tail(i, r - 1) + half(&m[r - 1])).collect(),
            Family::D => (0..r)
                .map(|i| {
                    if i + 1 < r {
                        tail(i, r - 2) + half(&(&m[r - 2] + &m[r - 1]))
                    } else {
                        half(&(&m[r - 1] - &m[r - 2]))
                    }
                })
                .collect(),
        }
    }

    /// Orthogonal coordinates when they are all integers.
    pub fn lambda_int(&self) -> Option<Vec<i64>> {
        self.lambda().iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect()
    }

    pub fn lambda_string(&self) -> String {
        self.lambda().iter().map(format_rational).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.group, self.lambda_string())
    }
}

/// The `k`-th fundamental weight, `1 <= k <= rank`.
pub fn fundamental_weight(group: GroupType, k: usize) -> Result<DominantWeight> {
    if k == 0 || k > group.rank {
        return Err(Error::Index { index: k, max: group.rank });
    }
    let mut labels = vec![0; group.rank];
    labels[k - 1] = 1;
    Ok(DominantWeight { group, labels })
}

fn dot(a: &[Rational], b: &[i64]) -> Rational {
    a.iter().zip(b).map(|(x, &y)| x * Rational::from_integer(BigInt::from(y))).sum()
}

/// Dimension of the irreducible representation with highest weight `w`.
pub fn weyl_dim(w: &DominantWeight) -> BigUint {
    let rho = w.group.rho();
    let lam = w.lambda();
    let shifted: Vec<Rational> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut prod = Rational::one();
    for a in w.group.positive_roots() {
        prod *= dot(&shifted, &a) / dot(&rho, &a);
    }
    debug_assert!(prod.is_integer() && prod.is_positive());
    prod.to_integer().to_biguint().expect("positive dimension")
}

/// Number of positive roots not orthogonal to `w`; the dimension of the
/// image of the flag variety under the embedding defined by `w`.
pub fn image_dim(w: &DominantWeight) -> usize {
    let lam = w.lambda();
    w.group.positive_roots().iter().filter(|a| !dot(&lam, a).is_zero()).count()
}

/// `e`-th forward difference at 0 of `k -> weyl_dim(k w)`.
fn forward_difference(w: &DominantWeight, e: usize) -> BigInt {
    let mut vals: Vec<BigInt> = (0..=e as u32).map(|k| BigInt::from(weyl_dim(&w.scaled(k)))).collect();
    for _ in 0..e {
        vals = vals.windows(2).map(|p| &p[1] - &p[0]).collect();
    }
    vals.pop().expect("one value remains")
}

/// `d!` times the coefficient of `k^d` in the Hilbert polynomial
/// `k -> weyl_dim(k w)`, where `d` is the dimension of the flag variety.
/// This is zero unless `w` is regular.
pub fn degree_oracle(w: &DominantWeight) -> BigUint {
    forward_difference(w, w.group.flag_dim()).to_biguint().expect("non-negative leading coefficient")
}

/// Dimension and degree of the image of the flag variety in `P(V_w)`.
pub fn projective_degree(w: &DominantWeight) -> (usize, BigUint) {
    let e = image_dim(w);
    (e, forward_difference(w, e).to_biguint().expect("positive degree"))
}

/// Coefficients (constant first) of the interpolating polynomial of
/// `k -> weyl_dim(k w)` through `k = 0..=d`.
pub fn hilbert_polynomial(w: &DominantWeight) -> Vec<Rational> {
    let d = w.group.flag_dim();
    let xs: Vec<Rational> = (0..=d as i64).map(|k| Rational::from_integer(BigInt::from(k))).collect();
    let ys: Vec<Rational> =
        (0..=d as u32).map(|k| Rational::from_integer(BigInt::from(weyl_dim(&w.scaled(k))))).collect();
    newton_interpolate(&xs, &ys)
}

/// Exact interpolation by divided differences; returns monomial coefficients.
pub fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut coeffs = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); n];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

pub fn eval_polynomial(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}
