use flagbodies::exactalg::ExponentVector;
use flagbodies::rootdata::{Family, GroupType};
use flagbodies::schubertcell::CellModel;
use flagbodies::schubertcell::{build_cell, build_cell_with_order, verify_flag_conditions, EliminationOrder, FormSpec};

fn groups() -> Vec<GroupType> {
    let mut out = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D] {
        for r in 2..=4 {
            out.push(GroupType::new(f, r).unwrap());
        }
    }
    out
}

fn lowest(cell: &CellModel, row: usize, col: usize) -> Vec<u32> {
    let (e, _) = cell.entry(row, col).lowest_term(cell.order()).unwrap().expect("nonzero entry");
    e.as_slice().to_vec()
}

fn mono(cell: &CellModel, factors: &[(usize, usize)]) -> Vec<u32> {
    let mut e = vec![0u32; cell.d()];
    for &(r, c) in factors {
        e[cell.variable_at(r, c).expect("independent factor")] += 1;
    }
    e
}

#[test]
fn antidiagonal_units_and_zero_lower_part() {
    for g in groups() {
        let cell = build_cell(g).unwrap();
        let n = cell.n();
        assert_eq!(cell.d(), g.flag_dim());
        for r in 0..n {
            for c in 0..n {
                let e = cell.entry(r, c);
                if r + c == n - 1 {
                    assert_eq!(e.as_constant(), Some(flagbodies::exactalg::rat(1)), "{g}");
                } else if r + c >= n {
                    assert!(e.is_zero(), "{g}");
                }
            }
        }
        for (k, &(r, c)) in cell.positions().iter().enumerate() {
            assert_eq!(cell.entry(r, c), &flagbodies::SparsePolynomial::var(cell.d(), k));
        }
    }
}

#[test]
fn lowest_terms_of_dependent_entries() {
    for g in groups() {
        if g.family == Family::A {
            continue;
        }
        let cell = build_cell(g).unwrap();
        let n = cell.n();
        let r = g.rank;
        for i in 0..n {
            for j in 0..n {
                if !cell.is_free_region(i, j) || cell.variable_at(i, j).is_some() {
                    continue;
                }
                if i > j {
                    assert_eq!(lowest(&cell, i, j), mono(&cell, &[(j, i)]), "{g} x^{}_{}", i + 1, j + 1);
                } else if g.family == Family::B {
                    assert_eq!(lowest(&cell, i, i), mono(&cell, &[(i, r), (i, r)]), "{g}");
                } else if g.family == Family::D && i + 1 < r {
                    assert_eq!(lowest(&cell, i, i), mono(&cell, &[(i, r - 1), (i, r)]), "{g}");
                } else {
                    assert_eq!((g.family, i), (Family::D, r - 1));
                    assert!(cell.entry(i, i).is_zero());
                }
            }
        }
    }
}

#[test]
fn flag_conditions_hold() {
    for g in groups() {
        if g.family == Family::A {
            continue;
        }
        let cell = build_cell(g).unwrap();
        assert!(verify_flag_conditions(&cell, &FormSpec::for_group(g).unwrap()).unwrap(), "{g}");
    }
}

#[test]
fn elimination_order_does_not_matter() {
    for g in groups() {
        let a = build_cell_with_order(g, EliminationOrder::IncreasingRowSum).unwrap();
        let b = build_cell_with_order(g, EliminationOrder::DecreasingColumn).unwrap();
        assert_eq!(a, b, "{g}");
    }
}

#[test]
fn type_c_rank2_row_two() {
    let cell = build_cell(GroupType::new(Family::C, 2).unwrap()).unwrap();
    let v2 = &cell.row_vectors()[1];
    let (e, _) = v2[0].lowest_term(cell.order()).unwrap().unwrap();
    assert_eq!(e, &ExponentVector::new(mono(&cell, &[(0, 1)])));
}
