//! Balance, switching equivalence, reducibility, the odd-hole search, and
//! the nonnegative-orientation theorem — each validated against an
//! independent brute-force oracle or a hand-computed fixture.

mod common;

use hspec_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Fixture: the friendship graph F_3 (three triangles sharing a hub) under two
// orientations. Vertices: hub 0; blades {1,2}, {3,4}, {5,6}. Edge insertion
// order: spokes 0-1, 0-2, 0-5, 0-6, 0-4, 0-3, then rims 1-2, 5-6, 3-4, so
// the blade pairs occupy edge indices {0,1}, {2,3}, {4,5}.
// ---------------------------------------------------------------------------

fn windmill() -> Graph {
    Graph::new(7, [(0, 1), (0, 2), (0, 5), (0, 6), (0, 4), (0, 3), (1, 2), (5, 6), (3, 4)])
        .unwrap()
}

fn windmill_first() -> OrientedGraph {
    let arcs = vec![(0, 1), (2, 0), (0, 5), (6, 0), (0, 4), (3, 0), (1, 2), (5, 6), (4, 3)];
    OrientedGraph::with_arcs(windmill(), arcs).unwrap()
}

/// The same graph with edges 2, 3, 5, 7 reversed.
fn windmill_second() -> OrientedGraph {
    windmill_first().flip_edges(&[false, false, true, true, false, true, false, true, false])
}

/// Signs of the 12 hub meetings under the first orientation, computed by
/// hand from arc attitudes at the hub: spokes 0, 2, 4 leave it, spokes 1, 3,
/// 5 enter it, and same attitude means +1. Rim edges (6, 7, 8) never meet an
/// edge outside their own triangle, so they are isolated.
const WINDMILL_POSITIVE: [(usize, usize); 6] =
    [(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5)];
const WINDMILL_NEGATIVE: [(usize, usize); 6] =
    [(0, 3), (0, 5), (1, 2), (1, 4), (2, 5), (3, 4)];

#[test]
fn hub_meeting_signs_follow_arc_attitudes() {
    let og = windmill_first();
    let t = TriangleSet::enumerate(og.graph());
    let sg = lambda_signed(&og, &t);
    assert_eq!(sg.vertex_count(), 9);
    assert_eq!(sg.edge_count(), 12);
    for (u, v) in WINDMILL_POSITIVE {
        assert_eq!(sg.sign(u, v), Some(1), "hub pair ({u}, {v})");
    }
    for (u, v) in WINDMILL_NEGATIVE {
        assert_eq!(sg.sign(u, v), Some(-1), "hub pair ({u}, {v})");
    }
    for rim in 6..9 {
        assert!(sg.neighbors(rim).is_empty(), "rim edge {rim} must be isolated");
    }
    // Every edge lies in exactly one triangle, so every loop weight is 1 + 2.
    assert!(sg.loop_weights().iter().all(|&w| w == 3));
}

#[test]
fn reorientation_gives_switching_equivalent_signatures() {
    let t = TriangleSet::enumerate(&windmill());
    let a = lambda_signed(&windmill_first(), &t);
    let b = lambda_signed(&windmill_second(), &t);
    assert!(a.same_underlying(&b));
    assert!(is_balanced(&a).balanced);
    assert!(is_balanced(&b).balanced);
    assert!(switching_equivalent(&a, &b));

    // The certificate is constructive: the balance assignment of the
    // edgewise sign product conjugates one adjacency matrix into the other.
    let mut product = SignedGraph::new(a.labels().to_vec());
    for &(u, v, s) in a.edges() {
        product.add_edge(u, v, s * b.sign(u, v).unwrap()).unwrap();
    }
    let cert = is_balanced(&product);
    assert!(cert.balanced);
    let conjugated = a.adjacency_matrix().conjugate_signs(&cert.assignment);
    assert!(conjugated.same_entries(&b.adjacency_matrix()));

    // Breaking a single hub sign leaves the class: the altered graph sits in
    // a triangle of hub meetings, so one flipped sign makes a negative
    // triangle, and no switching repairs that.
    let mut broken = SignedGraph::new(a.labels().to_vec());
    for &(u, v, s) in a.edges() {
        let s = if (u, v) == (0, 2) { -s } else { s };
        broken.add_edge(u, v, s).unwrap();
    }
    assert!(!switching_equivalent(&a, &broken));
}

// ---------------------------------------------------------------------------
// Balance against exhaustive assignment search.
// ---------------------------------------------------------------------------

/// Brute-force balance: some global sign assignment satisfies every edge.
fn balanced_by_enumeration(sg: &SignedGraph) -> bool {
    let n = sg.vertex_count();
    assert!(n <= 16, "oracle is exponential in the vertex count");
    (0u32..1 << n).any(|mask| {
        let s = |v: usize| if mask >> v & 1 == 1 { -1i8 } else { 1 };
        sg.edges().iter().all(|&(u, v, sign)| s(u) * sign * s(v) == 1)
    })
}

fn random_signed_graph(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> SignedGraph {
    let mut sg = SignedGraph::with_order(n);
    for (u, v) in pair_order(n) {
        if rng.gen_bool(edge_prob) {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            sg.add_edge(u, v, sign).unwrap();
        }
    }
    sg
}

#[test]
fn balance_agrees_with_assignment_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..300 {
        let n = rng.gen_range(2..=8);
        let sg = random_signed_graph(&mut rng, n, 0.5);
        let cert = is_balanced(&sg);
        assert_eq!(
            cert.balanced,
            balanced_by_enumeration(&sg),
            "trial {trial}: {:?}",
            sg.edges()
        );
    }
}

proptest! {
    /// Whatever the verdict, the certificate must justify it: a balanced
    /// assignment satisfies every edge, and a witness cycle is a genuine
    /// closed walk of sign product -1.
    #[test]
    fn certificates_are_sound(n in 2usize..8, edge_mask: u32, sign_mask: u32) {
        let pairs = pair_order(n);
        let mut sg = SignedGraph::with_order(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if edge_mask >> (k % 32) & 1 == 1 || k >= 32 {
                let sign = if sign_mask >> (k % 32) & 1 == 1 { -1 } else { 1 };
                sg.add_edge(u, v, sign).unwrap();
            }
        }
        let cert = is_balanced(&sg);
        if cert.balanced {
            prop_assert!(cert.witness_cycle.is_none());
            for &(u, v, s) in sg.edges() {
                prop_assert_eq!(cert.assignment[u] * s * cert.assignment[v], 1);
            }
        } else {
            let cycle = cert.witness_cycle.as_ref().expect("unbalanced needs a witness");
            prop_assert!(cycle.len() >= 3);
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), cycle.len(), "witness repeats a vertex");
            prop_assert_eq!(cycle_sign(&sg, cycle), Some(-1));
        }
    }
}

#[test]
fn switching_never_leaves_the_equivalence_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let a = random_signed_graph(&mut rng, n, 0.6);
        let s: Vec<i8> = (0..n).map(|_| if rng.gen_bool(0.5) { -1 } else { 1 }).collect();
        let mut switched = SignedGraph::with_order(n);
        for &(u, v, sign) in a.edges() {
            switched.add_edge(u, v, s[u] * sign * s[v]).unwrap();
        }
        assert!(switching_equivalent(&a, &switched));
        assert!(a
            .adjacency_matrix()
            .conjugate_signs(&s)
            .same_entries(&switched.adjacency_matrix()));
    }
}

#[test]
fn switching_equivalence_is_an_equivalence_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut transitive_hits = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let mask: u64 = rng.gen();
        let g = graph_from_mask(n, mask & ((1 << pair_order(n).len()) - 1));
        let sign_up = |rng: &mut ChaCha8Rng, g: &Graph| {
            let mut sg = SignedGraph::with_order(g.vertex_count());
            for &(u, v) in g.edges() {
                sg.add_edge(u, v, if rng.gen_bool(0.5) { 1 } else { -1 }).unwrap();
            }
            sg
        };
        let a = sign_up(&mut rng, &g);
        let b = sign_up(&mut rng, &g);
        let c = sign_up(&mut rng, &g);
        assert!(switching_equivalent(&a, &a));
        assert_eq!(switching_equivalent(&a, &b), switching_equivalent(&b, &a));
        if switching_equivalent(&a, &b) && switching_equivalent(&b, &c) {
            assert!(switching_equivalent(&a, &c));
            transitive_hits += 1;
        }
    }
    assert!(transitive_hits > 10, "sparse graphs should often be equivalent");
}

// ---------------------------------------------------------------------------
// Reducibility: components of the meeting structure against zero blocks of H.
// ---------------------------------------------------------------------------

#[test]
fn reducibility_partition_matches_zero_blocks_of_h() {
    let (og, t) = common::reference_oriented();
    assert!(!is_irreducible(&og, &t));
    let (left, right) = reducibility_partition(&og, &t).unwrap();
    assert_eq!(left, vec![0, 1, 2, 5]);
    assert_eq!(right, vec![3, 4]);
    let h = helmholtzian_direct(&og, &t);
    for &e in &left {
        for &f in &right {
            assert_eq!(h.get(e, f), 0, "cross pair ({e}, {f}) must vanish");
        }
    }
}

#[test]
fn reducibility_small_cases() {
    // Two edges of a path meet, so the structure is connected.
    let path = OrientedGraph::default_orientation(Graph::path(3));
    let t = TriangleSet::enumerate(path.graph());
    assert!(is_irreducible(&path, &t));
    assert_eq!(reducibility_partition(&path, &t), None);

    // In a triangle every meeting is co-triangular: three isolated edges.
    let k3 = OrientedGraph::default_orientation(Graph::complete(3));
    let t = TriangleSet::enumerate(k3.graph());
    assert!(!is_irreducible(&k3, &t));
    assert_eq!(reducibility_partition(&k3, &t), Some((vec![0], vec![1, 2])));

    // Disjoint edges never meet at all.
    let two = OrientedGraph::default_orientation(Graph::new(4, [(0, 1), (2, 3)]).unwrap());
    let t = TriangleSet::enumerate(two.graph());
    assert_eq!(reducibility_partition(&two, &t), Some((vec![0], vec![1])));
}

#[test]
fn irreducible_pieces_tile_every_small_graph() {
    // On each graph with at least one edge, the component partition of the
    // meeting structure must cover the edge set exactly once, and each side
    // of the returned split must be nonempty.
    for n in 2..=5 {
        for g in enumerate_all_graphs(n).unwrap() {
            if g.edge_count() == 0 {
                continue;
            }
            let t = TriangleSet::enumerate(&g);
            let og = OrientedGraph::default_orientation(g);
            match reducibility_partition(&og, &t) {
                None => assert!(is_irreducible(&og, &t)),
                Some((left, right)) => {
                    assert!(!left.is_empty() && !right.is_empty());
                    let mut all: Vec<usize> = left.iter().chain(&right).copied().collect();
                    all.sort_unstable();
                    let m = og.graph().edge_count();
                    assert_eq!(all, (0..m).collect::<Vec<_>>());
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Induced odd cycles >= 5 against subset enumeration.
// ---------------------------------------------------------------------------

#[test]
fn odd_hole_search_matches_brute_force() {
    for n in 1..=6 {
        for g in enumerate_all_graphs(n).unwrap() {
            let found = induced_odd_cycle_ge5(&g);
            assert_eq!(found.is_some(), common::brute_has_odd_hole(&g), "graph {:?}", g.edges());
            if let Some(cycle) = found {
                common::assert_induced_odd_cycle(&g, &cycle);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The nonnegative-orientation search.
// ---------------------------------------------------------------------------

/// Brute-force referee: try all 2^m orientations and report whether any
/// yields an entrywise nonnegative matrix.
fn nonnegative_orientation_exists(g: &Graph) -> bool {
    let m = g.edge_count();
    assert!(m <= 20, "orientation oracle is exponential in the edge count");
    let t = TriangleSet::enumerate(g);
    let base = OrientedGraph::default_orientation(g.clone());
    (0u32..1 << m).any(|mask| {
        let flips: Vec<bool> = (0..m).map(|e| mask >> e & 1 == 1).collect();
        let og = base.flip_edges(&flips);
        helmholtzian_direct(&og, &t).min_entry().unwrap_or(0) >= 0
    })
}

#[test]
fn orientation_search_is_complete_on_small_graphs() {
    for n in 1..=4 {
        for g in enumerate_all_graphs(n).unwrap() {
            let result = find_nonnegative_orientation(&g).unwrap();
            assert_eq!(
                result.found,
                nonnegative_orientation_exists(&g),
                "graph {:?}",
                g.edges()
            );
            // Four vertices cannot carry an induced odd cycle of length >= 5,
            // so the search must always succeed here.
            assert!(result.found);
            let og = result.orientation.unwrap();
            let t = TriangleSet::enumerate(&g);
            assert!(helmholtzian_direct(&og, &t).min_entry().unwrap_or(0) >= 0);
        }
    }
}

#[test]
fn five_vertex_graphs_where_search_fails_have_no_good_orientation() {
    let mut failures = 0;
    for g in enumerate_all_graphs(5).unwrap() {
        let result = find_nonnegative_orientation(&g).unwrap();
        match result.found {
            true => {
                let og = result.orientation.unwrap();
                let t = TriangleSet::enumerate(&g);
                assert!(helmholtzian_direct(&og, &t).min_entry().unwrap_or(0) >= 0);
            }
            false => {
                failures += 1;
                assert!(!nonnegative_orientation_exists(&g), "graph {:?}", g.edges());
            }
        }
    }
    // The pentagon and its relabelings are among the failures.
    assert!(failures > 0);
}

#[test]
fn odd_cycles_block_every_orientation() {
    for n in [5usize, 7] {
        let g = Graph::cycle(n);
        assert!(!nonnegative_orientation_exists(&g));
        let result = find_nonnegative_orientation(&g).unwrap();
        assert!(!result.found);
        assert!(result.orientation.is_none());
        let obstruction = result.obstruction.unwrap();
        assert_eq!(obstruction.len(), n);
        common::assert_induced_odd_cycle(&g, &obstruction);
    }
}

#[test]
fn even_cycles_and_trees_orient_nonnegatively() {
    for g in [Graph::cycle(6), Graph::cycle(8), Graph::path(7), Graph::complete(4)] {
        let result = find_nonnegative_orientation(&g).unwrap();
        assert!(result.found, "graph {:?}", g.edges());
    }
}
