use std::collections::HashMap;

use super::SparsePolynomial;
use crate::{Error, Result};

/// Dense matrix of polynomials over a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<SparsePolynomial>,
}

impl PolyMatrix {
    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix { nvars, rows, cols, entries: vec![SparsePolynomial::zero(nvars); rows * cols] }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<SparsePolynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape(format!("ragged row of length {} (expected {ncols})", row.len())));
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(Error::dim(nvars, e.nvars()));
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix { nvars, rows: nrows, cols: ncols, entries })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &SparsePolynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: SparsePolynomial) {
        assert_eq!(value.nvars(), self.nvars);
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[SparsePolynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { nvars: self.nvars, rows: rows.len(), cols: cols.len(), entries }
    }
}

/// Exact determinant. Cofactor expansion up to 4x4, and a memoized
/// expansion over column subsets for larger matrices (no division needed).
pub fn determinant(m: &PolyMatrix) -> Result<SparsePolynomial> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(SparsePolynomial::one(m.nvars));
    }
    if n <= 4 {
        let cols: Vec<usize> = (0..n).collect();
        return cofactor(m, 0, &cols);
    }
    let mut layer = subset_minors(m, n)?;
    Ok(layer.remove(&((1u64 << n) - 1)).unwrap_or_else(|| SparsePolynomial::zero(m.nvars)))
}

fn cofactor(m: &PolyMatrix, row: usize, cols: &[usize]) -> Result<SparsePolynomial> {
    if cols.len() == 1 {
        return Ok(m.get(row, cols[0]).clone());
    }
    let mut acc = SparsePolynomial::zero(m.nvars);
    for (idx, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = a.mul(&cofactor(m, row + 1, &rest)?)?;
        acc = if idx % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
    }
    Ok(acc)
}

/// All `k x k` minors of the first `k` rows keyed by column bitmask.
/// Zero minors are omitted.
fn subset_minors(m: &PolyMatrix, k: usize) -> Result<HashMap<u64, SparsePolynomial>> {
    if m.cols > 63 {
        return Err(Error::Unsupported(format!("{} columns", m.cols)));
    }
    let mut layer: HashMap<u64, SparsePolynomial> = HashMap::new();
    layer.insert(0, SparsePolynomial::one(m.nvars));
    for t in 0..k {
        let mut next: HashMap<u64, SparsePolynomial> = HashMap::new();
        for (&mask, minor) in &layer {
            for c in 0..m.cols {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let a = m.get(t, c);
                if a.is_zero() {
                    continue;
                }
                // Expanding the minor on mask|c along its last row: the entry
                // in column c sits at position idx among the sorted columns.
                let idx = (mask & ((1u64 << c) - 1)).count_ones() as usize;
                let mut term = a.mul(minor)?;
                if (t + idx) % 2 == 1 {
                    term = term.neg();
                }
                let slot = next.entry(mask | (1 << c)).or_insert_with(|| SparsePolynomial::zero(m.nvars));
                *slot = slot.add(&term)?;
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    Ok(layer)
}

/// All nonzero `k x k` minors of the first `k` rows, as (sorted columns, minor)
/// pairs in increasing bitmask order.
pub fn leading_row_minors(m: &PolyMatrix, k: usize) -> Result<Vec<(Vec<usize>, SparsePolynomial)>> {
    if k > m.rows || k > m.cols {
        return Err(Error::Shape(format!("{k}x{k} minors of a {}x{} matrix", m.rows, m.cols)));
    }
    let mut out: Vec<(u64, SparsePolynomial)> = subset_minors(m, k)?.into_iter().collect();
    out.sort_by_key(|(mask, _)| *mask);
    Ok(out.into_iter().map(|(mask, p)| ((0..m.cols).filter(|c| mask & (1 << c) != 0).collect(), p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> SparsePolynomial {
        SparsePolynomial::parse(s, n).unwrap()
    }

    fn int_matrix(a: &[Vec<i64>]) -> PolyMatrix {
        PolyMatrix::from_rows(
            1,
            a.iter().map(|r| r.iter().map(|&x| SparsePolynomial::constant(1, rat(x))).collect()).collect(),
        )
        .unwrap()
    }

    // Fraction-free (Bareiss) elimination in i64 with row pivoting.
    fn bareiss(mut a: Vec<Vec<i64>>) -> i64 {
        let n = a.len();
        let mut sign = 1;
        let mut prev = 1;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }

    #[test]
    fn one_by_one() {
        let f = p("y1 - 2*y2", 2);
        let m = PolyMatrix::from_rows(2, vec![vec![f.clone()]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), f);
    }

    #[test]
    fn two_by_two_cell_minor() {
        // [[x11, x12], [x21, 1]] with y1 = x12, y2 = x11, y3 = x21
        let m = PolyMatrix::from_rows(3, vec![vec![p("y2", 3), p("y1", 3)], vec![p("y3", 3), p("1", 3)]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), p("y2 - y1*y3", 3));
    }

    #[test]
    fn antidiagonal_units() {
        for n in 1..=7usize {
            let mut a = vec![vec![0i64; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[n - 1 - i] = 1;
            }
            let expected = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(determinant(&int_matrix(&a)).unwrap().as_constant(), Some(rat(expected)));
        }
    }

    #[test]
    fn non_square_is_shape_error() {
        let m = PolyMatrix::zeros(1, 2, 3);
        assert!(matches!(determinant(&m), Err(Error::Shape(_))));
    }

    #[test]
    fn minors_of_leading_rows() {
        let a = vec![vec![1, 2, 3], vec![4, 5, 6]];
        let mins = leading_row_minors(&int_matrix(&a), 2).unwrap();
        let got: Vec<(Vec<usize>, Rational)> = mins.into_iter().map(|(c, p)| (c, p.as_constant().unwrap())).collect();
        assert_eq!(got, vec![(vec![0, 1], rat(-3)), (vec![0, 2], rat(-6)), (vec![1, 2], rat(-3))]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_fraction_free_oracle(n in 1usize..=6, seed in prop::collection::vec(-4i64..=4, 36)) {
            let a: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 6..i * 6 + n].to_vec()).collect();
            let d = determinant(&int_matrix(&a)).unwrap().as_constant().unwrap();
            prop_assert_eq!(d, rat(bareiss(a)));
        }

        #[test]
        fn scalar_row_scaling(entries in prop::collection::vec((-2i64..=2, 0u32..2, 0u32..2), 9), r in -3i64..=3, row in 0usize..3) {
            let polys: Vec<SparsePolynomial> = entries.iter().map(|&(c, a, b)| {
                SparsePolynomial::monomial(2, crate::exactalg::ExponentVector::new(vec![a, b]), rat(c))
                    .add(&SparsePolynomial::var(2, (a as usize + b as usize) % 2)).unwrap()
            }).collect();
            let rows: Vec<Vec<SparsePolynomial>> = polys.chunks(3).map(|c| c.to_vec()).collect();
            let m = PolyMatrix::from_rows(2, rows.clone()).unwrap();
            let mut scaled = rows;
            for e in scaled[row].iter_mut() {
                *e = e.scale(&rat(r));
            }
            let ms = PolyMatrix::from_rows(2, scaled).unwrap();
            prop_assert_eq!(determinant(&ms).unwrap(), determinant(&m).unwrap().scale(&rat(r)));
        }
    }
}
