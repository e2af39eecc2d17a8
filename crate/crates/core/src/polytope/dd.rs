//! Double description: extreme rays of a pointed cone `{z : A z >= 0}` in
//! checked `i128` arithmetic with combinatorial adjacency.

use crate::exactalg::Rational;
use crate::{Error, Result};

use super::linalg::{dot_i128, gcd_i128, primitive_integer, rref, to_i128};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits(pub Vec<u64>);

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b))
    }
}

struct Ray {
    z: Vec<i128>,
    zeros: Bits,
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Extreme rays of `{z : rows z >= 0}`, each a primitive integer vector.
/// Fails with [`Error::Unbounded`] when the cone contains a line.
pub(crate) fn extreme_rays(rows: &[Vec<i128>], k: usize) -> Result<Vec<Vec<i128>>> {
    let m = rows.len();
    // Greedy choice of k independent rows.
    let mut basis_rows: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(row.iter().map(|&x| Rational::from_integer(x.into())).collect());
        if rref(&mut trial).len() > echelon.len() {
            echelon = trial;
            basis_rows.push(i);
            if basis_rows.len() == k {
                break;
            }
        }
    }
    if basis_rows.len() < k {
        return Err(Error::Unbounded);
    }
    // Columns of the inverse of the basis submatrix are the initial rays.
    let mut aug: Vec<Vec<Rational>> = basis_rows
        .iter()
        .enumerate()
        .map(|(bi, &i)| {
            let mut r: Vec<Rational> = rows[i].iter().map(|&x| Rational::from_integer(x.into())).collect();
            r.extend((0..k).map(|j| Rational::from_integer(((bi == j) as i64).into())));
            r
        })
        .collect();
    rref(&mut aug);
    let mut rays: Vec<Ray> = Vec::with_capacity(k);
    for j in 0..k {
        let col: Vec<Rational> = (0..k).map(|i| aug[i][k + j].clone()).collect();
        let z = to_i128(&primitive_integer(&col))?;
        let mut zeros = Bits::new(m);
        for (bi, &i) in basis_rows.iter().enumerate() {
            if bi != j {
                zeros.set(i);
            }
        }
        rays.push(Ray { z, zeros });
    }
    let in_basis = {
        let mut b = Bits::new(m);
        basis_rows.iter().for_each(|&i| b.set(i));
        b
    };
    for (i, row) in rows.iter().enumerate() {
        if in_basis.get(i) {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot_i128(row, &r.z)).collect::<Result<_>>()?;
        if vals.iter().all(|&v| v >= 0) {
            for (r, &v) in rays.iter_mut().zip(&vals) {
                if v == 0 {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j] < 0).collect();
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if (common.count() as usize) + 2 < k {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(t, r)| t == p || t == q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (vals[p], -vals[q]);
                let mut z = Vec::with_capacity(k);
                for (a, b) in rays[p].z.iter().zip(&rays[q].z) {
                    let t = vp.checked_mul(*b).and_then(|x| vq.checked_mul(*a).and_then(|y| x.checked_add(y)));
                    z.push(t.ok_or(Error::Overflow)?);
                }
                normalize(&mut z);
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray { z, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, &v) in rays.into_iter().zip(&vals) {
            if v > 0 {
                kept.push(r);
            } else if v == 0 {
                let mut r = r;
                r.zeros.set(i);
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }
    Ok(rays.into_iter().map(|r| r.z).collect())
}
