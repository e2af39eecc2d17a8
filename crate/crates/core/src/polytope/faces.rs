//! Face lattice, triangulation and combinatorial comparison, all driven by
//! the vertex-facet incidences.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use petgraph::graph::UnGraph;

use super::dd::Bits;
use super::{det_abs, integer_vertices, VPolytope};
use crate::exactalg::Rational;

/// Facets of a face: inclusion-maximal proper nonempty intersections with
/// the facets of the polytope.
fn subfaces(face: &Bits, facets: &[Bits]) -> Vec<Bits> {
    let total = face.count();
    let mut cands: Vec<Bits> = Vec::new();
    let mut seen = HashSet::new();
    for f in facets {
        let c = face.and(f);
        let n = c.count();
        if n == 0 || n == total {
            continue;
        }
        if seen.insert(c.clone()) {
            cands.push(c);
        }
    }
    cands.sort_by_key(|c| std::cmp::Reverse(c.count()));
    let mut out: Vec<Bits> = Vec::new();
    for c in cands {
        if !out.iter().any(|o| c.is_subset(o)) {
            out.push(c);
        }
    }
    out
}

fn all_vertices(n: usize) -> Bits {
    let mut b = Bits::new(n);
    (0..n).for_each(|i| b.set(i));
    b
}

/// Face counts `(f_0, ..., f_{e-1})` of an `e`-dimensional polytope.
pub fn f_vector(p: &VPolytope) -> Vec<usize> {
    let e = p.affine_dim();
    if e == 0 {
        return Vec::new();
    }
    let mut counts = vec![0usize; e];
    let mut level: HashSet<Bits> = p.incidence.iter().cloned().collect();
    for dim in (0..e).rev() {
        counts[dim] = level.len();
        if dim == 0 {
            break;
        }
        let mut next = HashSet::new();
        for f in &level {
            next.extend(subfaces(f, &p.incidence));
        }
        level = next;
    }
    counts
}

type Simplices = Rc<Vec<Vec<u32>>>;

/// Pulling triangulation: cone from the first vertex of each face over the
/// triangulations of the facets of that face not containing it.
fn triangulate(face: &Bits, dim: usize, facets: &[Bits], memo: &mut HashMap<Bits, Simplices>) -> Simplices {
    if let Some(s) = memo.get(face) {
        return s.clone();
    }
    let verts: Vec<u32> = face.ones().map(|v| v as u32).collect();
    let out: Vec<Vec<u32>> = if verts.len() == dim + 1 {
        vec![verts]
    } else {
        let apex = verts[0];
        let mut out = Vec::new();
        for g in subfaces(face, facets) {
            if g.get(apex as usize) {
                continue;
            }
            for s in triangulate(&g, dim - 1, facets, memo).iter() {
                let mut s = s.clone();
                s.push(apex);
                out.push(s);
            }
        }
        out
    };
    let out = Rc::new(out);
    memo.insert(face.clone(), out.clone());
    out
}

/// Normalised volume of a full-dimensional polytope.
pub(crate) fn simplex_volume_sum(p: &VPolytope) -> Rational {
    let e = p.dim;
    if e == 0 {
        return Rational::one();
    }
    let coords: Vec<usize> = (0..e).collect();
    let (pts, l) = integer_vertices(p, &coords);
    let whole = all_vertices(pts.len());
    let apex = 0usize;
    let mut memo = HashMap::new();
    let mut total = BigInt::zero();
    for g in subfaces(&whole, &p.incidence) {
        if g.get(apex) {
            continue;
        }
        for s in triangulate(&g, e - 1, &p.incidence, &mut memo).iter() {
            let rows: Vec<Vec<i128>> =
                s.iter().map(|&v| pts[v as usize].iter().zip(&pts[apex]).map(|(a, b)| a - b).collect()).collect();
            total += det_abs(&rows);
        }
    }
    Rational::new(total, num_traits::pow(l, e))
}

fn incidence_graph(p: &VPolytope) -> UnGraph<bool, ()> {
    let mut g = UnGraph::new_undirected();
    let vs: Vec<_> = (0..p.vertices.len()).map(|_| g.add_node(true)).collect();
    for f in &p.incidence {
        let node = g.add_node(false);
        for v in f.ones() {
            g.add_edge(vs[v], node, ());
        }
    }
    g
}

/// Whether the face lattices are isomorphic, via the vertex-facet incidence graphs.
pub fn combinatorially_equivalent(a: &VPolytope, b: &VPolytope) -> bool {
    if a.affine_dim() != b.affine_dim() || f_vector(a) != f_vector(b) {
        return false;
    }
    petgraph::algo::is_isomorphic_matching(&incidence_graph(a), &incidence_graph(b), |x, y| x == y, |_, _| true)
}
