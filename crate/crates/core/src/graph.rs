//! Graph representation, edge orientation, triangle enumeration, and
//! exhaustive small-graph streams.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Largest vertex count accepted by [`enumerate_all_graphs`].
pub const ENUMERATION_MAX_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    /// An explicit orientation names a vertex pair that is not the edge it claims to orient.
    OrientationMismatch { edge: usize },
    TooManyVertices { n: usize, max: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            GraphError::OrientationMismatch { edge } => {
                write!(f, "orientation for edge {edge} does not match its vertex pair")
            }
            GraphError::TooManyVertices { n, max } => {
                write!(f, "vertex count {n} exceeds supported maximum {max}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple undirected graph with vertices `0..n` and a fixed edge order.
///
/// The edge list order is the canonical index order for every edge-indexed
/// matrix built from the graph, so two graphs with the same edges in a
/// different order are distinct values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may come in either endpoint
    /// order; they are stored normalized as `(min, max)` in input order.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        let mut index = BTreeMap::new();
        let mut neighbors = alloc::vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            let pair = (u.min(v), u.max(v));
            if index.insert(pair, list.len()).is_some() {
                return Err(GraphError::DuplicateEdge { u: pair.0, v: pair.1 });
            }
            list.push(pair);
            neighbors[pair.0].push(pair.1);
            neighbors[pair.1].push(pair.0);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Ok(Graph { n, edges: list, index, neighbors })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge pairs `(u, v)` with `u < v`, in canonical index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Subgraph induced by `verts` (deduplicated, sorted), with vertices
    /// relabeled `0..verts.len()`. The second component maps each new edge
    /// index to the index of the same edge in `self`, preserving the parent
    /// edge order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut relabel = alloc::vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if relabel[u] != usize::MAX && relabel[v] != usize::MAX {
                edges.push((relabel[u], relabel[v]));
                edge_map.push(i);
            }
        }
        let sub = Graph::new(keep.len(), edges).expect("induced subgraph of a valid graph");
        (sub, edge_map)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (1..n).map(|i| (i - 1, i)).chain(core::iter::once((0, n - 1)));
        Graph::new(n, edges).expect("cycle is simple")
    }

    /// Cone over `k` disjoint edges: center `0` plus blades `(2i+1, 2i+2)`.
    pub fn friendship(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            edges.push((0, a));
            edges.push((0, b));
            edges.push((a, b));
        }
        Graph::new(2 * k + 1, edges).expect("friendship graph is simple")
    }

    /// The icosahedron: 12 vertices, 30 edges, 5-regular, every edge in
    /// exactly two triangles. Built as a pentagonal antiprism (vertices
    /// 1..=10) capped by two poles (0 and 11).
    pub fn icosahedron() -> Graph {
        let upper = |i: usize| 1 + i % 5;
        let lower = |i: usize| 6 + i % 5;
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((0, upper(i)));
        }
        for i in 0..5 {
            edges.push((upper(i), upper(i + 1)));
        }
        for i in 0..5 {
            edges.push((upper(i), lower(i)));
            edges.push((upper(i + 1), lower(i)));
        }
        for i in 0..5 {
            edges.push((lower(i), lower(i + 1)));
        }
        for i in 0..5 {
            edges.push((11, lower(i)));
        }
        Graph::new(12, edges).expect("icosahedron is simple")
    }
}

/// A graph together with one tail/head orientation per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    graph: Graph,
    /// `(tail, head)` per edge, in edge index order.
    arcs: Vec<(usize, usize)>,
}

impl OrientedGraph {
    /// Orients every edge from its smaller to its larger endpoint.
    pub fn default_orientation(graph: Graph) -> OrientedGraph {
        let arcs = graph.edges().to_vec();
        OrientedGraph { graph, arcs }
    }

    /// Builds an oriented graph from explicit `(tail, head)` pairs, one per
    /// edge in edge index order.
    pub fn with_arcs(graph: Graph, arcs: Vec<(usize, usize)>) -> Result<OrientedGraph, GraphError> {
        if arcs.len() != graph.edge_count() {
            return Err(GraphError::OrientationMismatch { edge: arcs.len().min(graph.edge_count()) });
        }
        for (i, &(t, h)) in arcs.iter().enumerate() {
            let (u, v) = graph.edges()[i];
            if (t.min(h), t.max(h)) != (u, v) || t == h {
                return Err(GraphError::OrientationMismatch { edge: i });
            }
        }
        Ok(OrientedGraph { graph, arcs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn tail(&self, e: usize) -> usize {
        self.arcs[e].0
    }

    pub fn head(&self, e: usize) -> usize {
        self.arcs[e].1
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        self.arcs[e]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Returns a copy with the direction of edge `e` reversed.
    pub fn flip_edge(&self, e: usize) -> OrientedGraph {
        let mut out = self.clone();
        let (t, h) = out.arcs[e];
        out.arcs[e] = (h, t);
        out
    }

    /// Returns a copy with every edge whose flag is set reversed.
    pub fn flip_edges(&self, flip: &[bool]) -> OrientedGraph {
        let mut out = self.clone();
        for (arc, &f) in out.arcs.iter_mut().zip(flip) {
            if f {
                *arc = (arc.1, arc.0);
            }
        }
        out
    }
}

/// The triangles of a graph, each carrying a cyclic traversal direction.
///
/// Triangles are stored as sorted triples `a < b < c` in lexicographic
/// order; the default traversal is `a -> b -> c -> a` and can be reversed
/// per triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSet {
    triangles: Vec<[usize; 3]>,
    reversed: Vec<bool>,
}

impl TriangleSet {
    /// Enumerates all triangles of `g` in lexicographic triple order.
    pub fn enumerate(g: &Graph) -> TriangleSet {
        let mut triangles = Vec::new();
        for a in 0..g.vertex_count() {
            for &b in g.neighbors(a) {
                if b <= a {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c <= b {
                        continue;
                    }
                    if g.has_edge(a, c) {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        triangles.sort_unstable();
        let reversed = alloc::vec![false; triangles.len()];
        TriangleSet { triangles, reversed }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Sorted vertex triples in lexicographic order.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn is_reversed(&self, i: usize) -> bool {
        self.reversed[i]
    }

    /// The three directed edges of triangle `i` in traversal order.
    pub fn traversal(&self, i: usize) -> [(usize, usize); 3] {
        let [a, b, c] = self.triangles[i];
        if self.reversed[i] {
            [(a, c), (c, b), (b, a)]
        } else {
            [(a, b), (b, c), (c, a)]
        }
    }

    /// Returns a copy with triangle `i`'s traversal direction reversed.
    pub fn flip_triangle(&self, i: usize) -> TriangleSet {
        let mut out = self.clone();
        out.reversed[i] = !out.reversed[i];
        out
    }
}

/// Per-edge triangle degree: the number of triangles containing each edge.
pub fn triangle_degrees(g: &Graph, t: &TriangleSet) -> Vec<usize> {
    let mut deg = alloc::vec![0usize; g.edge_count()];
    for tri in t.triangles() {
        let [a, b, c] = *tri;
        for (u, v) in [(a, b), (b, c), (a, c)] {
            let e = g.edge_index(u, v).expect("triangle edge exists in parent graph");
            deg[e] += 1;
        }
    }
    deg
}

/// Vertex pairs `(i, j)`, `i < j`, in column-major upper-triangle order:
/// `(0,1), (0,2), (1,2), (0,3), ...` This is the bit order of the graph6
/// encoding and of the enumeration bitmask.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Graph on `n` vertices whose edge set is the set bits of `mask`, bit `k`
/// meaning the `k`-th pair of [`pair_order`]. Edge order follows bit order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_order(n);
    debug_assert!(pairs.len() <= 64);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p);
    Graph::new(n, edges).expect("mask graph is simple")
}

/// Streams all `2^(n(n-1)/2)` labeled graphs on `n` vertices in bitmask
/// order. No isomorphism reduction is attempted.
pub fn enumerate_all_graphs(n: usize) -> Result<GraphStream, GraphError> {
    if n == 0 || n > ENUMERATION_MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n, max: ENUMERATION_MAX_VERTICES });
    }
    let bits = n * (n - 1) / 2;
    Ok(GraphStream { n, next: 0, end: 1u64 << bits })
}

/// Iterator over all labeled graphs on a fixed vertex count.
pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
}

impl GraphStream {
    /// Remaining mask range, usable to partition work across threads.
    pub fn mask_range(&self) -> core::ops::Range<u64> {
        self.next..self.end
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = graph_from_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}
