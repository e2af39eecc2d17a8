//! Coordinates on the open Schubert cell.
//!
//! A flag in general position with the standard flag is the row span of a
//! unique matrix with units on the main antidiagonal, zeros below it and
//! entries `x^i_j` (row `i`, column `j`, 1-based, `i + j <= n`) above it.
//! For orthogonal and isotropic flags some entries are determined by the
//! others; they are eliminated here by solving the form conditions.
//!
//! Internally positions are 0-based `(row, col)`.

use serde_json::{json, Value};

use crate::exactalg::{PolyMatrix, Rational, SparsePolynomial, VariableOrder};
use crate::rootdata::{Family, GroupType};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Symmetric,
    Symplectic,
}

/// Bilinear form with Gram matrix supported on the main antidiagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpec {
    pub kind: FormKind,
    pub n: usize,
    gram: Vec<Vec<i64>>,
}

impl FormSpec {
    pub fn new(kind: FormKind, n: usize) -> Result<Self> {
        if kind == FormKind::Symplectic && n % 2 == 1 {
            return Err(Error::Validation(format!("symplectic form needs even size, got {n}")));
        }
        let mut gram = vec![vec![0i64; n]; n];
        for (p, row) in gram.iter_mut().enumerate() {
            let q = n - 1 - p;
            row[q] = match kind {
                FormKind::Symmetric => 1,
                FormKind::Symplectic if p < q => 1,
                FormKind::Symplectic => -1,
            };
        }
        Ok(FormSpec { kind, n, gram })
    }

    /// The form preserved by the group, if any.
    pub fn for_group(group: GroupType) -> Result<Self> {
        match group.family {
            Family::A => Err(Error::Unsupported("type A carries no invariant form".into())),
            Family::C => FormSpec::new(FormKind::Symplectic, group.n()),
            Family::B | Family::D => FormSpec::new(FormKind::Symmetric, group.n()),
        }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn pair(&self, u: &[SparsePolynomial], v: &[SparsePolynomial]) -> Result<SparsePolynomial> {
        if u.len() != self.n || v.len() != self.n {
            return Err(Error::dim(self.n, u.len().min(v.len())));
        }
        let nvars = u[0].nvars();
        let mut acc = SparsePolynomial::zero(nvars);
        for p in 0..self.n {
            let q = self.n - 1 - p;
            if u[p].is_zero() || v[q].is_zero() {
                continue;
            }
            let t = u[p].mul(&v[q])?;
            acc = if self.gram[p][q] > 0 { acc.add(&t)? } else { acc.sub(&t)? };
        }
        Ok(acc)
    }

    /// Row pairs `(a, b)`, 0-based with `a <= b`, whose pairing must vanish:
    /// `V^i` is orthogonal to `V^{n-i}` for every `i`.
    fn condition_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..self.n {
            for b in a..self.n {
                let skew_diagonal = self.kind == FormKind::Symplectic && a == b;
                if a + b + 2 <= self.n && !skew_diagonal {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

/// Order in which ready flag conditions are consumed while eliminating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationOrder {
    /// Conditions on `(v_a, v_b)` by increasing `a + b`.
    IncreasingRowSum,
    /// Conditions on `(v_a, v_b)` by decreasing `b`.
    DecreasingColumn,
}

/// The matrix of the open cell with dependent entries expressed in the
/// independent coordinates `y_1, ..., y_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModel {
    group: GroupType,
    entries: PolyMatrix,
    positions: Vec<(usize, usize)>,
    order: VariableOrder,
}

fn is_independent(family: Family, row: usize, col: usize) -> bool {
    match family {
        Family::A => true,
        Family::C => row <= col,
        Family::B | Family::D => row < col,
    }
}

/// Independent positions in the order `y_1, ..., y_d`: columns from right
/// to left, top to bottom within a column.
fn y_positions(group: GroupType) -> Vec<(usize, usize)> {
    let n = group.n();
    let mut out = Vec::new();
    for col in (0..n - 1).rev() {
        for row in 0..n - 1 - col {
            if is_independent(group.family, row, col) {
                out.push((row, col));
            }
        }
    }
    out
}

pub fn build_cell(group: GroupType) -> Result<CellModel> {
    build_cell_with_order(group, EliminationOrder::IncreasingRowSum)
}

pub fn build_cell_with_order(group: GroupType, elimination: EliminationOrder) -> Result<CellModel> {
    let n = group.n();
    let positions = y_positions(group);
    let d = positions.len();
    if d != group.flag_dim() {
        return Err(Error::Validation(format!("{group}: found {d} free entries, expected {}", group.flag_dim())));
    }
    let mut dependent = Vec::new();
    for row in 0..n {
        for col in 0..n.saturating_sub(row + 1) {
            if !is_independent(group.family, row, col) {
                dependent.push((row, col));
            }
        }
    }
    let total = d + dependent.len();
    let mut entries = PolyMatrix::zeros(total, n, n);
    for row in 0..n {
        entries.set(row, n - 1 - row, SparsePolynomial::one(total));
    }
    for (v, &(r, c)) in positions.iter().chain(&dependent).enumerate() {
        entries.set(r, c, SparsePolynomial::var(total, v));
    }
    if !dependent.is_empty() {
        let form = FormSpec::for_group(group)?;
        let mut pairs = form.condition_pairs();
        match elimination {
            EliminationOrder::IncreasingRowSum => pairs.sort_by_key(|&(a, b)| (a + b, a)),
            EliminationOrder::DecreasingColumn => pairs.sort_by_key(|&(a, b)| (std::cmp::Reverse(b), a)),
        }
        let rows: Vec<Vec<SparsePolynomial>> = (0..n).map(|r| entries.row(r).to_vec()).collect();
        let mut conditions = Vec::new();
        for &(a, b) in &pairs {
            let c = form.pair(&rows[a], &rows[b])?;
            if !c.is_zero() {
                conditions.push(c);
            }
        }
        let solutions = eliminate(conditions, d, total)?;
        for (k, &(r, c)) in dependent.iter().enumerate() {
            entries.set(r, c, solutions[k].clone());
        }
    }
    let mut reduced = PolyMatrix::zeros(d, n, n);
    for r in 0..n {
        for c in 0..n {
            let e = entries.get(r, c).restrict_vars(d).ok_or_else(|| {
                Error::Validation(format!("{group}: entry ({}, {}) was not eliminated", r + 1, c + 1))
            })?;
            reduced.set(r, c, e);
        }
    }
    Ok(CellModel { group, entries: reduced, positions, order: VariableOrder::identity(d) })
}

/// Solves the conditions for the unknowns `first_unknown..total`, always
/// taking the first condition that is linear with constant coefficient in
/// its only unknown. Returns the unknowns' values, free of unknowns.
fn eliminate(
    mut conditions: Vec<SparsePolynomial>,
    first_unknown: usize,
    total: usize,
) -> Result<Vec<SparsePolynomial>> {
    let mut solutions: Vec<Option<SparsePolynomial>> = vec![None; total - first_unknown];
    while solutions.iter().any(Option::is_none) {
        let ready = conditions.iter().enumerate().find_map(|(i, c)| ready_unknown(c, first_unknown).map(|u| (i, u)));
        let Some((i, (u, coef))) = ready else {
            return Err(Error::Validation("flag conditions cannot be solved greedily".into()));
        };
        let cond = conditions.remove(i);
        let unit = SparsePolynomial::var(total, u).scale(&coef);
        let value = cond.sub(&unit)?.scale(&(-coef.recip()));
        for c in conditions.iter_mut() {
            *c = c.substitute_var(u, &value)?;
        }
        for s in solutions.iter_mut().flatten() {
            *s = s.substitute_var(u, &value)?;
        }
        conditions.retain(|c| !c.is_zero());
        solutions[u - first_unknown] = Some(value);
    }
    if let Some(c) = conditions.first() {
        return Err(Error::Validation(format!("flag condition {c} is not satisfied")));
    }
    Ok(solutions.into_iter().map(Option::unwrap).collect())
}

fn ready_unknown(c: &SparsePolynomial, first_unknown: usize) -> Option<(usize, Rational)> {
    let unknowns: Vec<usize> = c.support_vars().into_iter().filter(|&v| v >= first_unknown).collect();
    let [u] = unknowns[..] else {
        return None;
    };
    let mut coef = None;
    for (e, k) in c.terms() {
        let exps = e.as_slice();
        if exps[u] == 0 {
            continue;
        }
        if exps[u] != 1 || e.degree() != 1 {
            return None;
        }
        coef = Some(k.clone());
    }
    coef.map(|k| (u, k))
}

impl CellModel {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    /// Number of independent coordinates.
    pub fn d(&self) -> usize {
        self.positions.len()
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &SparsePolynomial {
        self.entries.get(row, col)
    }

    /// Independent positions, 0-based; `positions()[k]` carries `y_{k+1}`.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    /// Index of the coordinate at a 0-based position, if it is independent.
    pub fn variable_at(&self, row: usize, col: usize) -> Option<usize> {
        self.positions.iter().position(|&p| p == (row, col))
    }

    /// Whether the 0-based position lies strictly above the antidiagonal.
    pub fn is_free_region(&self, row: usize, col: usize) -> bool {
        row + col + 2 <= self.n()
    }

    /// Rows of the matrix: the basis `v_1, ..., v_n` of the moving flag.
    pub fn row_vectors(&self) -> Vec<Vec<SparsePolynomial>> {
        (0..self.n()).map(|r| self.entries.row(r).to_vec()).collect()
    }

    /// Copy with one entry replaced; the result need not satisfy the form conditions.
    pub fn with_entry(&self, row: usize, col: usize, value: SparsePolynomial) -> Result<CellModel> {
        if value.nvars() != self.d() {
            return Err(Error::dim(self.d(), value.nvars()));
        }
        let mut out = self.clone();
        out.entries.set(row, col, value);
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let n = self.n();
        let matrix: Vec<Vec<String>> = (0..n).map(|r| (0..n).map(|c| self.entry(r, c).to_string()).collect()).collect();
        let positions: Vec<Value> = self
            .positions
            .iter()
            .enumerate()
            .map(|(k, &(r, c))| json!({"var": format!("y{}", k + 1), "row": r + 1, "col": c + 1}))
            .collect();
        json!({
            "type": self.group.family.to_string(),
            "rank": self.group.rank,
            "n": n,
            "d": self.d(),
            "matrix": matrix,
            "independent": positions,
        })
    }
}

/// Checks that every required pairing of rows vanishes identically.
pub fn verify_flag_conditions(cell: &CellModel, form: &FormSpec) -> Result<bool> {
    if cell.group.family == Family::A {
        return Err(Error::Unsupported("type A cells carry no form conditions".into()));
    }
    if form.n != cell.n() {
        return Err(Error::dim(cell.n(), form.n));
    }
    let rows = cell.row_vectors();
    for (a, b) in form.condition_pairs() {
        if !form.pair(&rows[a], &rows[b])?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn row_vectors(cell: &CellModel) -> Vec<Vec<SparsePolynomial>> {
    cell.row_vectors()
}
