//! Signed graphs and the structural side of the theory: balance and
//! switching, reducibility, induced odd cycles, the nonnegative-orientation
//! search, and twin/co-twin surgery.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, OrientedGraph, TriangleSet};
use crate::incidence::{helmholtzian_direct, lambda_signed, ConsistencyError};
use crate::matrix::{Label, SymMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedGraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoopEdge { vertex: usize },
    DuplicatePair { u: usize, v: usize },
    BadSign { value: i8 },
}

impl fmt::Display for SignedGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedGraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for signed graph on {n} vertices")
            }
            SignedGraphError::SelfLoopEdge { vertex } => {
                write!(f, "signed edge may not join vertex {vertex} to itself (use loop weights)")
            }
            SignedGraphError::DuplicatePair { u, v } => {
                write!(f, "duplicate signed edge {{{u},{v}}}")
            }
            SignedGraphError::BadSign { value } => write!(f, "edge sign must be +1 or -1, got {value}"),
        }
    }
}

impl core::error::Error for SignedGraphError {}

/// A signed graph: at most one edge per vertex pair, each carrying a sign in
/// `{-1, +1}`, plus a nonnegative loop weight per vertex. Loops are always
/// positive and are ignored by balance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    labels: Vec<Label>,
    edges: Vec<(usize, usize, i8)>,
    index: BTreeMap<(usize, usize), usize>,
    neighbors: Vec<Vec<(usize, i8)>>,
    loops: Vec<usize>,
}

impl SignedGraph {
    pub fn new(labels: Vec<Label>) -> SignedGraph {
        let n = labels.len();
        SignedGraph {
            labels,
            edges: Vec::new(),
            index: BTreeMap::new(),
            neighbors: alloc::vec![Vec::new(); n],
            loops: alloc::vec![0; n],
        }
    }

    /// A signed graph on plain vertices `0..n`.
    pub fn with_order(n: usize) -> SignedGraph {
        SignedGraph::new((0..n).map(Label::Vertex).collect())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: i8) -> Result<(), SignedGraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(SignedGraphError::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(SignedGraphError::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(SignedGraphError::SelfLoopEdge { vertex: u });
        }
        if sign != 1 && sign != -1 {
            return Err(SignedGraphError::BadSign { value: sign });
        }
        let pair = (u.min(v), u.max(v));
        if self.index.insert(pair, self.edges.len()).is_some() {
            return Err(SignedGraphError::DuplicatePair { u: pair.0, v: pair.1 });
        }
        self.edges.push((pair.0, pair.1, sign));
        self.neighbors[pair.0].push((pair.1, sign));
        self.neighbors[pair.1].push((pair.0, sign));
        Ok(())
    }

    pub fn set_loop_weight(&mut self, v: usize, weight: usize) {
        self.loops[v] = weight;
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Signed edges `(u, v, sign)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize, i8)] {
        &self.edges
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn loop_weight(&self, v: usize) -> usize {
        self.loops[v]
    }

    pub fn loop_weights(&self) -> &[usize] {
        &self.loops
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<i8> {
        self.index.get(&(u.min(v), u.max(v))).map(|&i| self.edges[i].2)
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, i8)] {
        &self.neighbors[v]
    }

    /// The signed adjacency matrix: off-diagonal signs, zero diagonal.
    pub fn adjacency_matrix(&self) -> SymMatrix {
        let mut m = SymMatrix::zero(self.labels.clone());
        for &(u, v, s) in &self.edges {
            m.set_sym(u, v, s as i64);
        }
        m
    }

    /// Adjacency plus loop weights on the diagonal.
    pub fn adjacency_with_loops(&self) -> SymMatrix {
        let mut m = self.adjacency_matrix();
        for (v, &w) in self.loops.iter().enumerate() {
            m.add_to_diagonal(v, w as i64);
        }
        m
    }

    /// Connected components of the underlying unsigned graph, each sorted
    /// ascending, ordered by least vertex. Isolated vertices count.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut comp = alloc::vec![root];
            seen[root] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &(w, _) in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when both graphs have the same vertex count and the same
    /// unsigned edge set (signs and edge order ignored).
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.index.keys().eq(other.index.keys())
    }
}

/// Outcome of the balance test: a per-vertex switching assignment, and on
/// failure a cycle with negative sign product.
///
/// The assignment is only a valid switching certificate when `balanced`;
/// otherwise it records the partial propagation that met the conflict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingCertificate {
    pub balanced: bool,
    pub assignment: Vec<i8>,
    pub witness_cycle: Option<Vec<usize>>,
}

/// Tests balance by sign propagation: each component is rooted at its least
/// vertex with sign +1, neighbors are forced across edges, and any conflict
/// yields the fundamental cycle through the propagation tree as a witness.
pub fn is_balanced(sg: &SignedGraph) -> SwitchingCertificate {
    let n = sg.vertex_count();
    let mut assignment = alloc::vec![1i8; n];
    let mut seen = alloc::vec![false; n];
    let mut parent = alloc::vec![usize::MAX; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = alloc::vec![root];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &(w, sign) in sg.neighbors(v) {
                let forced = sign * assignment[v];
                if !seen[w] {
                    seen[w] = true;
                    assignment[w] = forced;
                    parent[w] = v;
                    queue.push(w);
                } else if assignment[w] != forced {
                    let witness = fundamental_cycle(&parent, v, w);
                    return SwitchingCertificate {
                        balanced: false,
                        assignment,
                        witness_cycle: Some(witness),
                    };
                }
            }
        }
    }
    SwitchingCertificate { balanced: true, assignment, witness_cycle: None }
}

/// Cycle through tree edges from `v` up to the meet point and back down to
/// `w`, closed by the non-tree edge `{v, w}`.
fn fundamental_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let mut up_v = alloc::vec![v];
    while parent[*up_v.last().unwrap()] != usize::MAX {
        up_v.push(parent[*up_v.last().unwrap()]);
    }
    let mut up_w = alloc::vec![w];
    while !up_v.contains(up_w.last().unwrap()) {
        up_w.push(parent[*up_w.last().unwrap()]);
    }
    let meet = *up_w.last().unwrap();
    let k = up_v.iter().position(|&x| x == meet).unwrap();
    // [meet, ..., v] then [w, ..., child of meet]; wraparound edge closes at meet.
    let mut cycle: Vec<usize> = up_v[..=k].iter().rev().copied().collect();
    cycle.extend_from_slice(&up_w[..up_w.len() - 1]);
    cycle
}

/// Sign product around a closed vertex walk in `sg`; answers whether a
/// witness cycle is genuinely negative.
pub fn cycle_sign(sg: &SignedGraph, cycle: &[usize]) -> Option<i8> {
    let mut product = 1i8;
    for i in 0..cycle.len() {
        let s = sg.sign(cycle[i], cycle[(i + 1) % cycle.len()])?;
        product *= s;
    }
    Some(product)
}

/// Two signed graphs on the same underlying graph are switching equivalent
/// exactly when the edgewise product of their signs is balanced.
///
/// Panics if the underlying unsigned graphs differ.
pub fn switching_equivalent(a: &SignedGraph, b: &SignedGraph) -> bool {
    assert!(a.same_underlying(b), "switching equivalence needs identical underlying graphs");
    let mut product = SignedGraph::new(a.labels().to_vec());
    for &(u, v, s) in a.edges() {
        let s2 = b.sign(u, v).expect("same underlying graph");
        product.add_edge(u, v, s * s2).expect("underlying graph is simple");
    }
    is_balanced(&product).balanced
}

/// H(G) is irreducible exactly when the reduced signed structure on the edge
/// set is connected.
pub fn is_irreducible(og: &OrientedGraph, t: &TriangleSet) -> bool {
    lambda_signed(og, t).components().len() == 1
}

/// A witness for reducibility: one connected component of the reduced signed
/// structure together with its complement, as edge-index sets. Every cross
/// pair is either co-triangular or vertex-disjoint. `None` when irreducible.
pub fn reducibility_partition(
    og: &OrientedGraph,
    t: &TriangleSet,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let comps = lambda_signed(og, t).components();
    if comps.len() <= 1 {
        return None;
    }
    let first = comps[0].clone();
    let mut rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    rest.sort_unstable();
    Some((first, rest))
}

/// Searches for a chordless odd cycle of length at least 5, returned as a
/// vertex list in cycle order. Depth-first over induced paths: the start is
/// the least vertex of the cycle, interior vertices may touch no earlier
/// path vertex, and a neighbor of the start can only close the cycle.
pub fn induced_odd_cycle_ge5(g: &Graph) -> Option<Vec<usize>> {
    let mut path = Vec::new();
    let mut in_path = alloc::vec![false; g.vertex_count()];
    for v0 in 0..g.vertex_count() {
        path.clear();
        path.push(v0);
        in_path.fill(false);
        in_path[v0] = true;
        if let Some(cycle) = chordless_search(g, v0, &mut path, &mut in_path) {
            return Some(cycle);
        }
    }
    None
}

fn chordless_search(
    g: &Graph,
    v0: usize,
    path: &mut Vec<usize>,
    in_path: &mut [bool],
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= v0 || in_path[w] {
            continue;
        }
        if path.len() == 1 {
            path.push(w);
            in_path[w] = true;
            let found = chordless_search(g, v0, path, in_path);
            in_path[w] = false;
            path.pop();
            if found.is_some() {
                return found;
            }
            continue;
        }
        // w may touch the path only at `last`, and at v0 when it closes the cycle.
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if g.has_edge(w, v0) {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            // Extending past w would leave the chord {w, v0}.
            continue;
        }
        path.push(w);
        in_path[w] = true;
        let found = chordless_search(g, v0, path, in_path);
        in_path[w] = false;
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Result of the search for an orientation making H entrywise nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationSearchResult {
    pub found: bool,
    pub orientation: Option<OrientedGraph>,
    /// Best-effort obstruction on failure: an induced odd cycle of length
    /// >= 5 when one exists. Failure with no located obstruction is possible
    /// because the two directions of the underlying theorem are not exact
    /// converses.
    pub obstruction: Option<Vec<usize>>,
}

/// Looks for an edge orientation under which H(G) is entrywise nonnegative.
///
/// The reduced signed structure is built under the default orientation and
/// tested for balance. A balanced assignment `s` yields the orientation
/// directly: flipping every edge with `s(e) = -1` conjugates H by the
/// corresponding ±1 diagonal matrix and turns every signed edge positive.
pub fn find_nonnegative_orientation(
    g: &Graph,
) -> Result<OrientationSearchResult, ConsistencyError> {
    let og = OrientedGraph::default_orientation(g.clone());
    let t = TriangleSet::enumerate(g);
    let cert = is_balanced(&lambda_signed(&og, &t));
    if !cert.balanced {
        return Ok(OrientationSearchResult {
            found: false,
            orientation: None,
            obstruction: induced_odd_cycle_ge5(g),
        });
    }
    let flips: Vec<bool> = cert.assignment.iter().map(|&s| s < 0).collect();
    let oriented = og.flip_edges(&flips);
    if helmholtzian_direct(&oriented, &t).min_entry().unwrap_or(0) < 0 {
        return Err(ConsistencyError::new(
            "balanced switching assignment still produced a negative entry",
        ));
    }
    Ok(OrientationSearchResult { found: true, orientation: Some(oriented), obstruction: None })
}

/// Adds a new vertex duplicating `v`'s neighborhood. With `cotwin` the copy
/// is also joined to `v` itself. Existing edge order is preserved; the new
/// edges follow in ascending neighbor order, the `{v, v'}` edge last.
pub fn add_twin(g: &Graph, v: usize, cotwin: bool) -> Graph {
    assert!(v < g.vertex_count(), "twin target out of range");
    let fresh = g.vertex_count();
    let mut edges = g.edges().to_vec();
    for &u in g.neighbors(v) {
        edges.push((u, fresh));
    }
    if cotwin {
        edges.push((v, fresh));
    }
    Graph::new(fresh + 1, edges).expect("twin extension of a valid graph")
}
