//! Gelfand-Zetlin tables and polytopes, and FFLV polytopes from Dyck paths.
//!
//! GZ coordinates follow the table row by row. FFLV coordinates follow the
//! open-cell coordinates `y_1, ..., y_d`, so FFLV polytopes can be compared
//! directly with valuation images.

mod fflv;

pub use fflv::{
    dyck_paths, fflv_coordinates, fflv_minkowski_decomposition, fflv_polytope, DyckPath, PathEnd, RootInterval,
};

use std::fmt;

use crate::exactalg::Rational;
use crate::polytope::{HPolytope, Inequality, LatticeSpec};
use crate::rootdata::{DominantWeight, Family, GroupType};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// `u^l_m` of the type-A table.
    U,
    /// `x^k_m` rows of the B/C/D tables.
    X,
    /// `y^k_m` rows of the B/C/D tables.
    Y,
}

/// One boxed entry of a GZ table: a coordinate of the GZ polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableEntry {
    pub role: Role,
    /// Upper index: row of its kind (`u^l`, `x^k`, `y^k`).
    pub level: usize,
    /// Lower index, 1-based within the row.
    pub m: usize,
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.role {
            Role::U => 'u',
            Role::X => 'x',
            Role::Y => 'y',
        };
        write!(f, "{c}^{}_{}", self.level, self.m)
    }
}

/// Content of a table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    /// `lambda_i`, 1-based.
    Weight(usize),
    Zero,
    /// Coordinate index into [`GZTable::entries`].
    Var(usize),
}

/// A GZ table: rows of cells, row 0 holding the weight. The cell `m` of row
/// `t` sits between cells `m` and `m + 1` of row `t - 1`.
#[derive(Debug, Clone)]
pub struct GZTable {
    group: GroupType,
    rows: Vec<Vec<Cell>>,
    entries: Vec<TableEntry>,
    /// (row, column) of each entry.
    place: Vec<(usize, usize)>,
}

impl GZTable {
    pub fn new(group: GroupType) -> GZTable {
        let r = group.rank;
        let mut t = GZTable { group, rows: Vec::new(), entries: Vec::new(), place: Vec::new() };
        match group.family {
            Family::A => {
                let n = r + 1;
                t.rows.push((1..=n).map(Cell::Weight).collect());
                for l in 1..n {
                    t.push_row(Role::U, l, n - l, false);
                }
            }
            Family::B | Family::C => {
                let mut top: Vec<Cell> = (1..=r).map(Cell::Weight).collect();
                top.push(Cell::Zero);
                t.rows.push(top);
                for k in 1..=r {
                    t.push_row(Role::X, k, r - k + 1, false);
                    if k < r {
                        t.push_row(Role::Y, k, r - k, true);
                    }
                }
            }
            Family::D => {
                t.rows.push((1..=r).map(Cell::Weight).collect());
                for k in 1..r {
                    t.push_row(Role::Y, k, r - k, false);
                    t.push_row(Role::X, k + 1, r - k, false);
                }
            }
        }
        t
    }

    fn push_row(&mut self, role: Role, level: usize, len: usize, trailing_zero: bool) {
        let row = self.rows.len();
        let mut cells = Vec::with_capacity(len + 1);
        for m in 1..=len {
            cells.push(Cell::Var(self.entries.len()));
            self.entries.push(TableEntry { role, level, m });
            self.place.push((row, m));
        }
        if trailing_zero {
            cells.push(Cell::Zero);
        }
        self.rows.push(cells);
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn index_of(&self, e: TableEntry) -> Option<usize> {
        self.entries.iter().position(|&x| x == e)
    }

    fn cell(&self, row: usize, m: usize) -> Option<Cell> {
        self.rows.get(row)?.get(m.checked_sub(1)?).copied()
    }

    pub fn upper_left(&self, idx: usize) -> Option<Cell> {
        let (row, m) = self.place[idx];
        self.cell(row - 1, m)
    }

    pub fn upper_right(&self, idx: usize) -> Option<Cell> {
        let (row, m) = self.place[idx];
        self.cell(row - 1, m + 1)
    }

    /// Sizes of the diagonals `m + row = const`, largest constant first: the
    /// column heights of the table after rotating it by three eighths of a turn.
    pub fn rotated_profile(&self) -> Vec<usize> {
        let max = self.place.iter().map(|&(t, m)| t + m).max().unwrap_or(0);
        let min = self.place.iter().map(|&(t, m)| t + m).min().unwrap_or(0);
        (min..=max).rev().map(|c| self.place.iter().filter(|&&(t, m)| t + m == c).count()).collect()
    }

    /// Entries ending an x-row next to the zero column (B/C) or without an
    /// upper-right neighbour (D).
    pub fn last_x_entries(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| {
                self.entries[i].role == Role::X
                    && !matches!(self.cell(self.place[i].0, self.place[i].1 + 1), Some(Cell::Var(_)))
            })
            .collect()
    }
}

/// Linear form `coeffs . x + constant`.
struct Affine {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl Affine {
    fn zero(d: usize) -> Affine {
        Affine { coeffs: vec![Rational::from_integer(0.into()); d], constant: Rational::from_integer(0.into()) }
    }

    fn add_cell(&mut self, c: Cell, sign: i64, lambda: &[Rational]) {
        let s = Rational::from_integer(sign.into());
        match c {
            Cell::Var(i) => self.coeffs[i] += s,
            Cell::Weight(i) => self.constant += s * &lambda[i - 1],
            Cell::Zero => {}
        }
    }

    /// `self <= 0` as an inequality.
    fn nonpositive(self) -> Inequality {
        Inequality::new(self.coeffs, -self.constant)
    }
}

/// The GZ polytope: each entry lies between its upper-left (above) and
/// upper-right (below) neighbours; type D adds its extra inequalities.
pub fn gz_polytope(w: &DominantWeight) -> Result<HPolytope> {
    let table = GZTable::new(w.group());
    let lambda = w.lambda();
    let d = table.entries.len();
    let mut ineqs = Vec::with_capacity(2 * d);
    for i in 0..d {
        if let Some(ul) = table.upper_left(i) {
            let mut f = Affine::zero(d);
            f.add_cell(Cell::Var(i), 1, &lambda);
            f.add_cell(ul, -1, &lambda);
            ineqs.push(f.nonpositive());
        }
        if let Some(ur) = table.upper_right(i) {
            let mut f = Affine::zero(d);
            f.add_cell(ur, 1, &lambda);
            f.add_cell(Cell::Var(i), -1, &lambda);
            ineqs.push(f.nonpositive());
        }
    }
    if w.group().family == Family::D {
        ineqs.extend(type_d_extra(&table, &lambda));
    }
    HPolytope::new(d, ineqs, Vec::new())
}

/// `x^i_{n-i} + x^i_{n+1-i} + x^{i+1}_{n-i} >= y^i_{n-i}` for `i < n`, and
/// `x^{i+1}_{n-i-1} + x^i_{n+1-i} + x^{i+1}_{n-i} >= y^i_{n-i}` for `i < n - 1`,
/// where the row `x^1` is the weight itself.
fn type_d_extra(table: &GZTable, lambda: &[Rational]) -> Vec<Inequality> {
    let n = table.group.rank;
    let d = table.entries.len();
    let x = |i: usize, m: usize| -> Cell {
        if i == 1 {
            Cell::Weight(m)
        } else {
            Cell::Var(table.index_of(TableEntry { role: Role::X, level: i, m }).expect("x entry"))
        }
    };
    let y = |i: usize, m: usize| Cell::Var(table.index_of(TableEntry { role: Role::Y, level: i, m }).expect("y entry"));
    let mut out = Vec::new();
    for i in 1..n {
        let mut lhs = vec![x(i, n - i), x(i, n + 1 - i), x(i + 1, n - i)];
        let mut forms = vec![lhs.clone()];
        if i + 1 < n {
            lhs[0] = x(i + 1, n - i - 1);
            forms.push(lhs);
        }
        for cells in forms {
            let mut f = Affine::zero(d);
            f.add_cell(y(i, n - i), 1, lambda);
            for c in cells {
                f.add_cell(c, -1, lambda);
            }
            out.push(f.nonpositive());
        }
    }
    out
}

/// The lattice whose points in the GZ polytope count `dim V_lambda`. In type
/// B the last x-entry of every row may be half-integral; with a half-integral
/// weight (B or D) all other entries are shifted by 1/2.
pub fn gz_lattice(w: &DominantWeight) -> LatticeSpec {
    let shifted = w.lambda_int().is_none();
    match w.group().family {
        Family::A | Family::C => LatticeSpec::Standard,
        Family::B => LatticeSpec::HalfInteger { half: GZTable::new(w.group()).last_x_entries(), shifted },
        Family::D if shifted => LatticeSpec::HalfInteger { half: Vec::new(), shifted },
        Family::D => LatticeSpec::Standard,
    }
}
