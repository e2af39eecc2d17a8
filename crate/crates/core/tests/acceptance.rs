//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
//! its runtime and time limit; all comparisons are exact.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use flagbodies::exactalg::{compare_lex, determinant, rat, ExponentVector, Rational, SparsePolynomial, VariableOrder};
use flagbodies::nobody::{matching_permutations, run_grid, verdict, GridConfig, Pipeline, Verdict};
use flagbodies::patterns::{fflv_polytope, gz_lattice, gz_polytope};
use flagbodies::polytope::{
    ehrhart_count, equals, f_vector, h_to_v, hull, normalized_volume, v_to_h, HPolytope, Inequality, LatticeSpec,
    Point, VPolytope,
};
use flagbodies::rootdata::{degree_oracle, newton_interpolate, weyl_dim, DominantWeight, Family, GroupType};
use flagbodies::schubertcell::build_cell;
use flagbodies::valuation::{lowest_term_valuation, product_generators, valuation_image, ProductCap};

const TYPE_A_GRID: &str = include_str!("../grids/type_a.toml");
const TYPE_C_GRID: &str = include_str!("../grids/type_c.toml");

/// Cases per randomized kernel property.
const KERNEL_CASES: u32 = 1000;
/// Per-weight limit for the lattice-point oracle.
const PER_WEIGHT_LIMIT: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn group(f: Family, r: usize) -> GroupType {
    GroupType::new(f, r).expect("valid group")
}

fn weight(f: Family, labels: &[u32]) -> DominantWeight {
    DominantWeight::from_labels(group(f, labels.len()), labels.to_vec()).expect("valid weight")
}

fn points(raw: &[&[i64]]) -> Vec<Point> {
    let mut v: Vec<Point> = raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
    v.sort();
    v
}

fn row(a: &[i64], b: i64) -> Inequality {
    Inequality::new(a.iter().map(|&x| rat(x)).collect(), rat(b))
}

fn sl3_adjoint() -> Outcome {
    let p = Pipeline::new();
    let g = group(Family::A, 2);
    let cell = ok(p.cell(g))?;
    let spaces = [ok(p.fundamental(g, 1))?.space.clone(), ok(p.fundamental(g, 2))?.space.clone()];
    let prods = ok(product_generators(&spaces, &[1, 1], ProductCap::default()))?;
    let image: Vec<Point> = ok(valuation_image(&prods, cell.order()))?.iter().map(|v| v.to_rationals()).collect();
    let expect =
        points(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0], &[0, 1, 1], &[0, 2, 0], &[1, 0, 0], &[1, 0, 1], &[1, 1, 0]]);
    check(image == expect, || format!("valuation image {image:?}"))?;
    let body = ok(hull(&image))?;
    let vol = normalized_volume(&body);
    check(vol == rat(6), || format!("volume {vol}"))?;
    let w = weight(Family::A, &[1, 1]);
    let fflv = ok(h_to_v(&ok(fflv_polytope(&w))?))?;
    check(ok(equals(&body, &fflv))?, || "hull differs from FFLV".into())?;
    let deg = degree_oracle(&w);
    check(deg == 6u32.into(), || format!("degree {deg}"))?;
    // (0,1,0) is the midpoint of (0,0,0) and (0,2,0)
    let extremal = expect.iter().filter(|x| !in_hull_of_others(x, &expect)).count();
    check(extremal == body.vertices().len(), || "vertex count disagrees with brute force".into())?;
    Ok(format!("8 points, {} extremal, volume 6 = degree 6, equal to FFLV", extremal))
}

fn in_hull_of_others(x: &Point, pts: &[Point]) -> bool {
    let others: Vec<Point> = pts.iter().filter(|p| *p != x).cloned().collect();
    hull(&others).map(|h| h.contains_point(x)).unwrap_or(false)
}

fn grid(text: &str) -> Outcome {
    let cfg = ok(GridConfig::from_toml(text))?;
    let report = ok(run_grid(&Pipeline::new(), &cfg))?;
    println!("{report}");
    let bad: Vec<String> =
        report.rows.iter().filter(|r| !r.success()).map(|r| format!("{} {:?}", r.group, r.labels)).collect();
    check(bad.is_empty(), || format!("failed: {}", bad.join(", ")))?;
    Ok(format!("{} weights certified and equal to FFLV", report.rows.len()))
}

fn dimension_oracle() -> Outcome {
    let mut weights = Vec::new();
    for text in [TYPE_A_GRID, TYPE_C_GRID] {
        weights.extend(ok(ok(GridConfig::from_toml(text))?.expand())?.into_iter().map(|(w, _)| w));
    }
    let results: Vec<Result<Duration, String>> = weights
        .par_iter()
        .map(|w| {
            let t = Instant::now();
            let gz = ok(gz_polytope(w))?;
            let fflv = ok(fflv_polytope(w))?;
            let lattice = gz_lattice(w);
            for k in 1..=3u32 {
                let expect = weyl_dim(&w.scaled(k)).to_u64().ok_or("dimension overflow")?;
                let a = ok(ehrhart_count(&gz, k, &lattice))?;
                let b = ok(ehrhart_count(&fflv, k, &LatticeSpec::Standard))?;
                check(a == expect && b == expect, || format!("{w} k={k}: GZ {a}, FFLV {b}, dim {expect}"))?;
            }
            let dt = t.elapsed();
            check(dt < PER_WEIGHT_LIMIT, || format!("{w} took {dt:?}"))?;
            Ok(dt)
        })
        .collect();
    let mut slowest = Duration::ZERO;
    for r in results {
        slowest = slowest.max(r?);
    }
    Ok(format!("{} weights, k = 1..3, slowest {:.2} s", weights.len(), slowest.as_secs_f64()))
}

fn b2_system(l1: i64, l2: i64) -> Vec<Inequality> {
    let mut rows: Vec<Inequality> = (0..4)
        .map(|i| {
            let mut a = [0; 4];
            a[i] = -1;
            row(&a, 0)
        })
        .collect();
    rows.push(row(&[1, 0, 0, 0], l1));
    rows.push(row(&[0, 0, 1, 0], l2));
    rows.push(row(&[2, 1, 2, 2], 2 * (l1 + l2)));
    rows.push(row(&[2, 1, 1, 1], 2 * l1 + l2));
    rows
}

fn b2_reproduction() -> Outcome {
    let p = Pipeline::new();
    let g = group(Family::B, 2);
    let p1 = ok(p.fundamental_body(g, 1))?;
    let p2 = ok(p.fundamental_body(g, 2))?;
    check(p1.vertices() == points(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 0, 1]]), || {
        format!("P1 vertices {:?}", p1.vertices())
    })?;
    check(p2.vertices() == points(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]), || {
        format!("P2 vertices {:?}", p2.vertices())
    })?;
    let mut facets = Vec::new();
    for (l1, l2) in [(1u32, 0u32), (0, 1), (1, 1), (2, 1)] {
        let res = ok(p.certify(&weight(Family::B, &[l1, l2])))?;
        check(res.certified, || format!("({l1},{l2}) not certified"))?;
        let body_h = v_to_h(&res.body);
        let rows = b2_system(l1.into(), l2.into());
        let system = ok(HPolytope::new(4, rows.clone(), Vec::new()))?;
        check(ok(system.canonical())? == body_h, || format!("({l1},{l2}): facets {:?}", body_h.inequalities()))?;
        if res.body.is_full_dimensional() {
            let listed: BTreeSet<Inequality> = rows.iter().map(Inequality::canonical).collect();
            let found: BTreeSet<Inequality> = body_h.inequalities().iter().cloned().collect();
            check(listed == found, || format!("({l1},{l2}): listed system is not irredundant"))?;
        }
        facets.push(body_h.inequalities().len());
    }
    Ok(format!("P1, P2 verbatim; facet counts {facets:?}"))
}

fn b2_inequivalence() -> Outcome {
    let b = ok(Pipeline::new().certify(&weight(Family::B, &[2, 1])))?.body;
    let c = ok(h_to_v(&ok(fflv_polytope(&weight(Family::C, &[2, 1])))?))?;
    let (fb, fc) = (f_vector(&b), f_vector(&c));
    check(fb != fc, || format!("equal f-vectors {fb:?}"))?;
    Ok(format!("B2 {fb:?} vs FFLV C2 {fc:?}"))
}

fn d3_reproduction() -> Outcome {
    let p = Pipeline::new();
    let d3 = group(Family::D, 3);
    let expected = [
        points(&[
            &[0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 1, 0, 0],
        ]),
        points(&[&[0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]),
        points(&[&[0, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]),
    ];
    // P_k goes to the FFLV polytope of the A3 fundamental weight `targets[k]`
    let targets = [[0u32, 1, 0], [1, 0, 0], [0, 0, 1]];
    let mut sets: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for k in 1..=3 {
        let body = ok(p.fundamental_body(d3, k))?;
        check(body.vertices() == expected[k - 1], || format!("P{k} vertices {:?}", body.vertices()))?;
        let a3: VPolytope = ok(h_to_v(&ok(fflv_polytope(&weight(Family::A, &targets[k - 1])))?))?;
        let perms = ok(matching_permutations(&body, &a3))?;
        check(!perms.is_empty(), || format!("no permutation for P{k}"))?;
        sets.push(perms.into_iter().collect());
    }
    let common = sets[0].iter().filter(|s| sets[1].contains(*s) && sets[2].contains(*s)).count();
    check(common == 0, || format!("{common} common permutations"))?;
    let counts: Vec<usize> = sets.iter().map(BTreeSet::len).collect();
    Ok(format!("vertex lists exact; permutations per weight {counts:?}, common 0"))
}

fn lowest_terms() -> Outcome {
    let mut checked = 0;
    for f in [Family::B, Family::C, Family::D] {
        for r in 2..=4 {
            let g = group(f, r);
            let cell = ok(build_cell(g))?;
            let n = cell.n();
            let mono = |factors: &[(usize, usize)]| -> Result<Vec<u32>, String> {
                let mut e = vec![0u32; cell.d()];
                for &(i, j) in factors {
                    e[cell.variable_at(i, j).ok_or("dependent factor")?] += 1;
                }
                Ok(e)
            };
            for i in 0..n {
                for j in 0..n {
                    if !cell.is_free_region(i, j) || cell.variable_at(i, j).is_some() {
                        continue;
                    }
                    let entry = cell.entry(i, j);
                    let expect = if i > j {
                        mono(&[(j, i)])?
                    } else if f == Family::B {
                        mono(&[(i, r), (i, r)])?
                    } else if f == Family::D && i + 1 < r {
                        mono(&[(i, r - 1), (i, r)])?
                    } else {
                        // the forced zero of type D
                        check(f == Family::D && i == r - 1 && entry.is_zero(), || format!("{g} ({i},{j})"))?;
                        continue;
                    };
                    let got = ok(lowest_term_valuation(entry, cell.order()))?;
                    let got: Vec<u32> = got.coords().iter().map(|&x| x as u32).collect();
                    check(got == expect, || format!("{g} entry ({},{}): {got:?} vs {expect:?}", i + 1, j + 1))?;
                    checked += 1;
                }
            }
        }
    }
    // rows 1, 2 and columns 1, 2 of the B2 matrix
    let cell = ok(build_cell(group(Family::B, 2)))?;
    let sub = cell.entries().submatrix(&[0, 1], &[0, 1]);
    let det = ok(determinant(&sub))?;
    check(!det.is_zero() && !cell.entry(0, 0).is_zero() && !cell.entry(1, 1).is_zero(), || {
        "degenerate witness".into()
    })?;
    let diag = ok(lowest_term_valuation(cell.entry(0, 0), cell.order()))?
        .plus(&ok(lowest_term_valuation(cell.entry(1, 1), cell.order()))?);
    let minor = ok(lowest_term_valuation(&det, cell.order()))?;
    check(minor != diag, || "diagonal term is lowest".into())?;
    Ok(format!(
        "{checked} dependent entries; B2 minor x11*x22 - x12*x21 has lowest exponent {:?}, diagonal {:?}",
        minor.coords(),
        diag.coords()
    ))
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..=3), 1..5).prop_map(move |terms| {
        SparsePolynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), rat(c))))
            .expect("matching lengths")
    })
}

fn order_strategy(nvars: usize) -> impl Strategy<Value = VariableOrder> {
    Just((0..nvars).collect::<Vec<usize>>()).prop_shuffle().prop_map(|r| VariableOrder::new(r).expect("permutation"))
}

fn cloud() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-2i64..=2, d), 1..8))
}

fn run(name: &str, f: impl Fn(&mut TestRunner) -> Result<(), String>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: KERNEL_CASES, failure_persistence: None, ..Config::default() });
    f(&mut runner).map_err(|e| format!("{name}: {e}"))
}

fn kernel_properties() -> Outcome {
    run("valuation additivity", |r| {
        let s = order_strategy(4).prop_flat_map(|o| (Just(o), poly_strategy(4), poly_strategy(4)));
        r.run(&s, |(o, f, g)| {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = f.mul(&g).unwrap();
            let lhs = lowest_term_valuation(&fg, &o).unwrap();
            let rhs = lowest_term_valuation(&f, &o).unwrap().plus(&lowest_term_valuation(&g, &o).unwrap());
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("lex order", |r| {
        let e = || prop::collection::vec(0u32..4, 4).prop_map(ExponentVector::new);
        let s = (order_strategy(4), e(), e(), e());
        r.run(&s, |(o, a, b, c)| {
            let ab = compare_lex(&a, &b, &o).unwrap();
            prop_assert_eq!(ab, compare_lex(&b, &a, &o).unwrap().reverse());
            prop_assert_eq!(ab.is_eq(), a == b);
            prop_assert_eq!(compare_lex(&a.add(&c), &b.add(&c), &o).unwrap(), ab);
            let bc = compare_lex(&b, &c, &o).unwrap();
            if ab.is_le() && bc.is_le() {
                prop_assert!(compare_lex(&a, &c, &o).unwrap().is_le());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("hull round trip", |r| {
        r.run(&cloud(), |raw| {
            let pts: Vec<Point> = raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
            let p = hull(&pts).unwrap();
            let back = h_to_v(&v_to_h(&p)).unwrap();
            prop_assert_eq!(back.vertices(), p.vertices());
            prop_assert_eq!(v_to_h(&back), v_to_h(&p));
            for x in &pts {
                prop_assert!(p.contains_point(x));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("Ehrhart polynomial vs volume", |r| {
        r.run(&cloud(), |raw| {
            let pts: Vec<Point> = raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
            let p = hull(&pts).unwrap();
            prop_assume!(p.is_full_dimensional());
            let d = p.dim();
            let h = v_to_h(&p);
            let count = |k: u32| rat(ehrhart_count(&h, k, &LatticeSpec::Standard).unwrap() as i64);
            let xs: Vec<Rational> = (0..=d as i64).map(rat).collect();
            let ys: Vec<Rational> = (0..=d as u32).map(count).collect();
            let coeffs = newton_interpolate(&xs, &ys);
            prop_assert!(coeffs[0].is_one());
            let fact: i64 = (1..=d as i64).product();
            prop_assert_eq!(&coeffs[d] * rat(fact), normalized_volume(&p));
            let k = d as u32 + 1;
            let at_k = coeffs.iter().rev().fold(rat(0), |acc, c| acc * rat(k as i64) + c);
            prop_assert_eq!(at_k, count(k));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    Ok(format!("4 properties x {KERNEL_CASES} cases"))
}

#[test]
fn acceptance_suite() {
    let criteria: Vec<Criterion> = vec![
        ("1 SL3 adjoint fixture", Duration::from_secs(1), sl3_adjoint),
        ("2 type A grid equals FFLV", Duration::from_secs(300), || grid(TYPE_A_GRID)),
        ("3 type C grid equals FFLV", Duration::from_secs(600), || grid(TYPE_C_GRID)),
        ("4 lattice points match Weyl dimensions", Duration::from_secs(600), dimension_oracle),
        ("5 B2 bodies and inequalities", Duration::from_secs(60), b2_reproduction),
        ("6 B2 body vs FFLV C2 f-vectors", Duration::from_secs(60), b2_inequivalence),
        ("7 D3 fundamental bodies and permutations", Duration::from_secs(120), d3_reproduction),
        ("8 lowest terms of cell entries", Duration::from_secs(120), lowest_terms),
        ("9 kernel properties", Duration::from_secs(120), kernel_properties),
    ];
    let mut failed = Vec::new();
    let mut lines = Vec::new();
    for (name, limit, f) in criteria {
        let t = Instant::now();
        let out = f();
        let dt = t.elapsed();
        let out = out.and_then(|s| {
            if dt <= limit {
                Ok(s)
            } else {
                Err(format!("took {:.2} s, limit {} s", dt.as_secs_f64(), limit.as_secs()))
            }
        });
        let line = match &out {
            Ok(s) => format!("PASS  {name}  ({:.2} s, limit {} s)  {s}", dt.as_secs_f64(), limit.as_secs()),
            Err(e) => format!("FAIL  {name}  ({:.2} s, limit {} s)  {e}", dt.as_secs_f64(), limit.as_secs()),
        };
        println!("{line}");
        lines.push(line);
        if out.is_err() {
            failed.push(name);
        }
    }
    println!("\nsummary:");
    for l in &lines {
        println!("{l}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn verdict_of_reference_against_itself() {
    let w = weight(Family::C, &[1, 1]);
    let p = h_to_v(&fflv_polytope(&w).unwrap()).unwrap();
    assert_eq!(verdict(&p, &p).unwrap(), Verdict::Equal);
}
