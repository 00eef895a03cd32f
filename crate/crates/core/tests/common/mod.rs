//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's own code paths: exact
//! integer determinants and ranks validate eigensolver output, and a plain
//! triple loop validates triangle enumeration.

#![allow(dead_code)]

use hspec_core::*;

/// The 5-vertex, 6-edge reference graph: two triangles glued along an edge
/// plus a pendant edge, with a pinned non-default orientation. Its matrices
/// are known in full and drive most hand-checked expectations.
pub fn reference_oriented() -> (OrientedGraph, TriangleSet) {
    let g = reference_graph();
    let arcs = vec![(0, 1), (2, 1), (1, 4), (3, 4), (3, 2), (3, 1)];
    let t = TriangleSet::enumerate(&g);
    (OrientedGraph::with_arcs(g, arcs).unwrap(), t)
}

pub fn reference_graph() -> Graph {
    Graph::new(5, [(0, 1), (2, 1), (1, 4), (3, 4), (3, 2), (3, 1)]).unwrap()
}

/// Exact determinant by fraction-free (Bareiss) elimination. Only for small
/// matrices; intermediate values are minors and stay within i128 here.
pub fn bareiss_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Exact rank by fraction-free elimination with full pivot search.
pub fn int_rank(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..rows {
            for j in col + 1..cols {
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// `M - x·I` as exact integer rows, for determinant/rank oracles.
pub fn shifted(m: &SymMatrix, x: i64) -> Vec<Vec<i128>> {
    let n = m.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.get(i, j) as i128 - if i == j { x as i128 } else { 0 })
                .collect()
        })
        .collect()
}

/// Triangle count the dumb way: ordered triple scan.
pub fn brute_triangle_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// All chordless odd cycles of length >= 5, found by brute force over vertex
/// subsets; an independent oracle for the DFS search.
pub fn brute_has_odd_hole(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let k = verts.len();
        if k < 5 || k % 2 == 0 {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&verts);
        // An induced subgraph is a chordless cycle iff it is 2-regular and
        // connected; for a 2-regular graph connectivity <=> one cycle.
        if sub.edge_count() != k || (0..k).any(|v| sub.degree(v) != 2) {
            continue;
        }
        if connected(&sub) {
            return true;
        }
    }
    false
}

fn connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        count += 1;
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Asserts two descending lists are equal as multisets within `tol`.
pub fn assert_multiset_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len(), "lengths differ: {got:?} vs {want:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= tol, "mismatch: {got:?} vs {want:?}");
    }
}

/// Asserts every needle can be matched to a distinct haystack value within
/// `tol` (multiset containment).
pub fn assert_multiset_contained(needles: &[f64], haystack: &[f64], tol: f64) {
    let mut used = vec![false; haystack.len()];
    for &x in needles {
        let hit = haystack
            .iter()
            .enumerate()
            .position(|(i, &v)| !used[i] && (v - x).abs() <= tol);
        match hit {
            Some(i) => used[i] = true,
            None => panic!("value {x} not contained in {haystack:?}"),
        }
    }
}

pub fn default_h_spectrum(g: &Graph) -> Vec<f64> {
    let t = TriangleSet::enumerate(g);
    let og = OrientedGraph::default_orientation(g.clone());
    sym_eigenvalues(&helmholtzian_direct(&og, &t)).unwrap()
}

/// Validates a claimed chordless odd cycle: odd length >= 5, consecutive
/// vertices adjacent, all other pairs non-adjacent.
pub fn assert_induced_odd_cycle(g: &Graph, cycle: &[usize]) {
    assert!(cycle.len() >= 5 && cycle.len() % 2 == 1, "length {}", cycle.len());
    for i in 0..cycle.len() {
        for j in (i + 1)..cycle.len() {
            let consecutive = j == i + 1 || (i == 0 && j == cycle.len() - 1);
            assert_eq!(
                g.has_edge(cycle[i], cycle[j]),
                consecutive,
                "pair ({}, {}) of {cycle:?}",
                cycle[i],
                cycle[j]
            );
        }
    }
}
