//! Construction of every matrix attached to an oriented graph: the
//! edge-vertex incidence B, the triangle-edge incidence C, the Laplacian
//! L = BᵀB, the Helmholtzian H = BBᵀ + CᵀC (built two independent ways),
//! the signed structures it encodes, and the block form H′.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{triangle_degrees, OrientedGraph, TriangleSet};
use crate::matrix::{Label, RectMatrix, SymMatrix};
use crate::signed::SignedGraph;

/// A construction identity that must hold by the theory failed; indicates a
/// convention bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyError {
    what: &'static str,
}

impl ConsistencyError {
    pub(crate) fn new(what: &'static str) -> ConsistencyError {
        ConsistencyError { what }
    }
}

impl fmt::Display for ConsistencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "internal consistency violated: {}", self.what)
    }
}

impl core::error::Error for ConsistencyError {}

fn arc_labels(og: &OrientedGraph) -> Vec<Label> {
    og.arcs().iter().map(|&(tail, head)| Label::Arc { tail, head }).collect()
}

fn vertex_labels(n: usize) -> Vec<Label> {
    (0..n).map(Label::Vertex).collect()
}

fn triangle_labels(t: &TriangleSet) -> Vec<Label> {
    (0..t.len())
        .map(|i| {
            let [(a, _), (b, _), (c, _)] = t.traversal(i);
            Label::Triangle([a, b, c])
        })
        .collect()
}

/// The m×n edge-vertex incidence matrix B: row e has −1 at tail(e) and +1
/// at head(e).
pub fn edge_vertex_incidence(og: &OrientedGraph) -> RectMatrix {
    let mut b = RectMatrix::zero(arc_labels(og), vertex_labels(og.graph().vertex_count()));
    for e in 0..og.edge_count() {
        let (tail, head) = og.arc(e);
        b.set(e, tail, -1);
        b.set(e, head, 1);
    }
    b
}

/// The t×m triangle-edge incidence matrix C: +1 where the edge's direction
/// agrees with the triangle's cyclic traversal, −1 where it opposes.
pub fn triangle_edge_incidence(og: &OrientedGraph, t: &TriangleSet) -> RectMatrix {
    let g = og.graph();
    let mut c = RectMatrix::zero(triangle_labels(t), arc_labels(og));
    for i in 0..t.len() {
        for (u, v) in t.traversal(i) {
            let e = g.edge_index(u, v).expect("triangle edge exists in parent graph");
            c.set(i, e, if og.arc(e) == (u, v) { 1 } else { -1 });
        }
    }
    c
}

/// The graph Laplacian L = BᵀB; equals the degree diagonal minus the
/// adjacency matrix, independent of the orientation.
pub fn laplacian(og: &OrientedGraph) -> SymMatrix {
    edge_vertex_incidence(og).transpose().gram()
}

/// Off-diagonal Helmholtzian entry for a distinct edge pair, by the sign
/// rule alone: `None` for vertex-disjoint or co-triangular pairs (entry 0),
/// otherwise −1 for a head-to-tail meeting and +1 for head-to-head or
/// tail-to-tail.
fn pair_sign(og: &OrientedGraph, e: usize, f: usize) -> Option<i8> {
    let g = og.graph();
    let (a, b) = g.edges()[e];
    let (c, d) = g.edges()[f];
    let shared = if a == c || a == d {
        a
    } else if b == c || b == d {
        b
    } else {
        return None;
    };
    // Two edges of a triangle never contribute: the third side closes it.
    let (x, y) = (a + b - shared, c + d - shared);
    if g.has_edge(x, y) {
        return None;
    }
    let (te, he) = og.arc(e);
    let (tf, hf) = og.arc(f);
    Some(if he == tf || te == hf { -1 } else { 1 })
}

/// The Helmholtzian built entrywise from its definition: diagonal △(e)+2,
/// off-diagonal ±1 by the meeting rule with co-triangular pairs zeroed.
pub fn helmholtzian_direct(og: &OrientedGraph, t: &TriangleSet) -> SymMatrix {
    let deg = triangle_degrees(og.graph(), t);
    let mut h = SymMatrix::zero(arc_labels(og));
    for e in 0..og.edge_count() {
        h.set_sym(e, e, deg[e] as i64 + 2);
        for f in (e + 1)..og.edge_count() {
            if let Some(s) = pair_sign(og, e, f) {
                h.set_sym(e, f, s as i64);
            }
        }
    }
    h
}

/// The Helmholtzian built from its factorization BBᵀ + CᵀC. Must agree with
/// [`helmholtzian_direct`] exactly; the pair forms the construction oracle.
pub fn helmholtzian_product(og: &OrientedGraph, t: &TriangleSet) -> SymMatrix {
    let b = edge_vertex_incidence(og);
    let c = triangle_edge_incidence(og, t);
    b.gram().add(&c.transpose().gram())
}

/// The signed structure on the edge set of G: vertex e carries △(e)+2 loops,
/// and non-co-triangular meeting edge pairs are joined with the sign of
/// their Helmholtzian entry. Read without loops this is the reduced signed
/// graph whose adjacency is the off-diagonal part of H.
pub fn lambda_signed(og: &OrientedGraph, t: &TriangleSet) -> SignedGraph {
    let deg = triangle_degrees(og.graph(), t);
    let mut sg = SignedGraph::new(arc_labels(og));
    for e in 0..og.edge_count() {
        sg.set_loop_weight(e, deg[e] + 2);
        for f in (e + 1)..og.edge_count() {
            if let Some(s) = pair_sign(og, e, f) {
                sg.add_edge(e, f, s).expect("edge pairs visited once");
            }
        }
    }
    sg
}

/// Sign with which edge `e` enters triangle `i`: +1 when its direction
/// agrees with the traversal.
fn agreement(og: &OrientedGraph, t: &TriangleSet, i: usize, e: usize) -> i8 {
    let (u, v) = og.graph().edges()[e];
    for (a, b) in t.traversal(i) {
        if (a.min(b), a.max(b)) == (u, v) {
            return if og.arc(e) == (a, b) { 1 } else { -1 };
        }
    }
    unreachable!("edge does not belong to triangle");
}

/// The signed graph on the triangle set: two triangles sharing an edge are
/// joined with sign +1 when the shared edge enters both with the same
/// agreement, −1 otherwise. Its adjacency satisfies CCᵀ = 3I + A; flipping
/// edge directions leaves it unchanged (both agreements flip).
pub fn triangular_signed(og: &OrientedGraph, t: &TriangleSet) -> SignedGraph {
    let g = og.graph();
    let mut sg = SignedGraph::new(triangle_labels(t));
    for i in 0..t.len() {
        for j in (i + 1)..t.len() {
            let [a, b, c] = t.triangles()[i];
            let shared: Vec<usize> =
                [a, b, c].into_iter().filter(|v| t.triangles()[j].contains(v)).collect();
            if shared.len() != 2 {
                continue;
            }
            let e = g.edge_index(shared[0], shared[1]).expect("shared pair is an edge");
            let s = agreement(og, t, i, e) * agreement(og, t, j, e);
            // Distinct triangles share at most one edge, so pairs repeat never.
            sg.add_edge(i, j, s).expect("triangle pairs visited once");
        }
    }
    sg
}

/// The t×t block 3I + A(G_△) appearing in the block form of H.
pub fn triangle_block(og: &OrientedGraph, t: &TriangleSet) -> SymMatrix {
    let mut m = triangular_signed(og, t).adjacency_matrix();
    for i in 0..m.order() {
        m.add_to_diagonal(i, 3);
    }
    m
}

/// The (n+t)×(n+t) block-diagonal matrix with blocks L and 3I + A(G_△); it
/// shares its nonzero spectrum with H. Verifies C·B = O before assembling.
pub fn hprime(og: &OrientedGraph, t: &TriangleSet) -> Result<SymMatrix, ConsistencyError> {
    let b = edge_vertex_incidence(og);
    let c = triangle_edge_incidence(og, t);
    if !c.mul(&b).is_zero() {
        return Err(ConsistencyError::new("C·B is not the zero matrix"));
    }
    Ok(SymMatrix::block_diag(&laplacian(og), &triangle_block(og, t)))
}
