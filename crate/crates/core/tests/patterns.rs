use flagbodies::exactalg::rat;
use flagbodies::patterns::{
    dyck_paths, fflv_coordinates, fflv_minkowski_decomposition, fflv_polytope, gz_lattice, gz_polytope, PathEnd,
};
use flagbodies::polytope::{
    dilate, ehrhart_count, equals, h_to_v, lattice_points, minkowski_sum, LatticeSpec, VPolytope,
};
use flagbodies::rootdata::{fundamental_weight, weyl_dim, DominantWeight, Family, GroupType};
use flagbodies::schubertcell::build_cell;
use num_traits::ToPrimitive;

fn weight(f: Family, labels: &[u32]) -> DominantWeight {
    DominantWeight::from_labels(GroupType::new(f, labels.len()).unwrap(), labels.to_vec()).unwrap()
}

fn small_weights() -> Vec<DominantWeight> {
    let mut out = Vec::new();
    for l in [[0u32, 0], [1, 0], [0, 1], [1, 1], [2, 1], [1, 2], [2, 2]] {
        out.push(weight(Family::A, &l));
        out.push(weight(Family::C, &l));
    }
    for l in [[1u32, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, 0, 1]] {
        out.push(weight(Family::A, &l));
        out.push(weight(Family::C, &l));
    }
    out
}

#[test]
fn fflv_coordinates_are_the_cell_variables() {
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::C, 2), (Family::C, 3), (Family::C, 4)] {
        let g = GroupType::new(f, r).unwrap();
        let cell = build_cell(g).unwrap();
        let n = cell.n();
        let coords = fflv_coordinates(g).unwrap();
        assert_eq!(coords.len(), cell.d());
        for (c, &(row, col)) in coords.iter().zip(cell.positions()) {
            assert_eq!((c.a, c.b), (row + 1, n - col - 1), "{g}");
        }
    }
}

#[test]
fn lattice_counts_match_weyl_dimension() {
    for w in small_weights() {
        let dim = weyl_dim(&w).to_u64().unwrap();
        let gz = gz_polytope(&w).unwrap();
        let fflv = fflv_polytope(&w).unwrap();
        assert_eq!(lattice_points(&gz, gz_lattice(&w)).unwrap().len() as u64, dim, "GZ {w}");
        assert_eq!(lattice_points(&fflv, LatticeSpec::Standard).unwrap().len() as u64, dim, "FFLV {w}");
        for k in 2..=3 {
            let expect = weyl_dim(&w.scaled(k)).to_u64().unwrap();
            assert_eq!(ehrhart_count(&gz, k, &gz_lattice(&w)).unwrap(), expect, "GZ {w} k={k}");
            assert_eq!(ehrhart_count(&fflv, k, &LatticeSpec::Standard).unwrap(), expect, "FFLV {w} k={k}");
        }
    }
}

#[test]
fn fflv_is_minkowski_sum_of_fundamentals() {
    for w in small_weights() {
        let g = w.group();
        let mut acc = VPolytope::point(vec![rat(0); g.flag_dim()]);
        for (k, m) in fflv_minkowski_decomposition(&w).unwrap() {
            let p = h_to_v(&fflv_polytope(&fundamental_weight(g, k).unwrap()).unwrap()).unwrap();
            acc = minkowski_sum(&acc, &dilate(&p, m).unwrap()).unwrap();
        }
        assert!(equals(&acc, &h_to_v(&fflv_polytope(&w).unwrap()).unwrap()).unwrap(), "{w}");
    }
}

#[test]
fn fflv_right_hand_sides_are_nonnegative_integers() {
    for w in small_weights() {
        let h = fflv_polytope(&w).unwrap();
        for ineq in h.inequalities() {
            assert!(ineq.b.is_integer() && ineq.b >= rat(0), "{w}: {ineq}");
        }
    }
}

#[test]
fn gz_of_type_a_example() {
    let w = DominantWeight::from_lambda(GroupType::new(Family::A, 2).unwrap(), &[1, 0, -1]).unwrap();
    let h = gz_polytope(&w).unwrap();
    assert_eq!(h.dim(), 3);
    assert_eq!(lattice_points(&h, LatticeSpec::Standard).unwrap().len(), 8);
    let shifted = DominantWeight::from_lambda(w.group(), &[4, 3, 2]).unwrap();
    assert_eq!(fflv_polytope(&shifted).unwrap(), fflv_polytope(&w).unwrap());
}

#[test]
fn small_lattice_counts() {
    let c = |l: &[u32]| {
        lattice_points(&fflv_polytope(&weight(Family::C, l)).unwrap(), LatticeSpec::Standard).unwrap().len()
    };
    assert_eq!(c(&[1, 0]), 4);
    assert_eq!(c(&[0, 1]), 5);
    let gz = gz_polytope(&weight(Family::C, &[1, 0])).unwrap();
    assert_eq!(lattice_points(&gz, LatticeSpec::Standard).unwrap().len(), 4);
}

#[test]
fn type_c_paths_may_end_at_zeros() {
    let g = GroupType::new(Family::C, 2).unwrap();
    let to_zero = dyck_paths(g, 1, PathEnd::Zero(1)).unwrap();
    assert!(!to_zero.is_empty());
    for p in &to_zero {
        assert_eq!(p.cells.last().map(|c| (c.a, c.b)), Some((1, 3)));
        assert_eq!(p.bound(&[2, 1]), 3);
    }
    let top = dyck_paths(g, 2, PathEnd::Column(3)).unwrap();
    assert_eq!(top.len(), 1);
    assert_eq!(top[0].bound(&[2, 1]), 1);
}
