//! Theorem checkers: eigenvalue interlacing for induced subgraphs, the
//! block-spectrum decomposition, the clique eigenvalue-count bound, the
//! largest-eigenvalue bound, and the λ₁ = μ₁ survey.

use alloc::vec::Vec;
use core::fmt;

use crate::eigen::{sym_eigenvalues, EigenError};
use crate::graph::{
    enumerate_all_graphs, triangle_degrees, Graph, GraphError, OrientedGraph, TriangleSet,
};
use crate::incidence::{helmholtzian_direct, laplacian, triangle_block};

/// Additive slack for the interlacing inequalities.
pub const INTERLACING_SLACK: f64 = 1e-8;
/// Tolerance for matching two computed eigenvalues (block decomposition,
/// λ₁ = μ₁ survey) and for the nonzero filter feeding those comparisons.
pub const TOL_MATCH: f64 = 1e-7;
/// Eigenvalues of H may not fall below this (positive semi-definiteness).
pub const PSD_FLOOR: f64 = -1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum CheckError {
    Graph(GraphError),
    Eigen(EigenError),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Graph(e) => write!(f, "{e}"),
            CheckError::Eigen(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CheckError {}

impl From<GraphError> for CheckError {
    fn from(e: GraphError) -> CheckError {
        CheckError::Graph(e)
    }
}

impl From<EigenError> for CheckError {
    fn from(e: EigenError) -> CheckError {
        CheckError::Eigen(e)
    }
}

fn h_spectrum_of(g: &Graph) -> Result<Vec<f64>, EigenError> {
    let t = TriangleSet::enumerate(g);
    let og = OrientedGraph::default_orientation(g.clone());
    sym_eigenvalues(&helmholtzian_direct(&og, &t))
}

/// Interlacing of H-spectra between a graph and an induced subgraph, with
/// the triangle-degree deficits κ shifting both bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct InterlacingReport {
    /// The vertex subset, deduplicated and ascending.
    pub subset: Vec<usize>,
    pub kappa_min: i64,
    pub kappa_max: i64,
    /// H-spectrum of the parent graph, descending (length m).
    pub parent_values: Vec<f64>,
    /// H-spectrum of the induced subgraph, descending (length m′).
    pub sub_values: Vec<f64>,
    /// Per index i: λ_i ≥ λ′_i + κ_min.
    pub lower_ok: Vec<bool>,
    /// Per index i: λ′_i + κ_max ≥ λ_{m−m′+i}.
    pub upper_ok: Vec<bool>,
    pub pass: bool,
}

/// Checks both interlacing inequalities for the subgraph induced by
/// `subset`. An edgeless induced subgraph yields a trivially passing report
/// with empty comparisons.
pub fn interlacing_check(g: &Graph, subset: &[usize]) -> Result<InterlacingReport, EigenError> {
    let (sub, edge_map) = g.induced_subgraph(subset);
    let mut vertices: Vec<usize> = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();

    let parent_values = h_spectrum_of(g)?;
    let sub_values = h_spectrum_of(&sub)?;

    let parent_deg = triangle_degrees(g, &TriangleSet::enumerate(g));
    let sub_deg = triangle_degrees(&sub, &TriangleSet::enumerate(&sub));
    let kappas: Vec<i64> = edge_map
        .iter()
        .enumerate()
        .map(|(e, &parent_e)| parent_deg[parent_e] as i64 - sub_deg[e] as i64)
        .collect();
    let kappa_min = kappas.iter().copied().min().unwrap_or(0);
    let kappa_max = kappas.iter().copied().max().unwrap_or(0);

    let (m, mp) = (parent_values.len(), sub_values.len());
    let mut lower_ok = Vec::with_capacity(mp);
    let mut upper_ok = Vec::with_capacity(mp);
    for i in 0..mp {
        lower_ok.push(parent_values[i] >= sub_values[i] + kappa_min as f64 - INTERLACING_SLACK);
        upper_ok.push(sub_values[i] + kappa_max as f64 >= parent_values[m - mp + i] - INTERLACING_SLACK);
    }
    let pass = lower_ok.iter().all(|&b| b) && upper_ok.iter().all(|&b| b);
    Ok(InterlacingReport {
        subset: vertices,
        kappa_min,
        kappa_max,
        parent_values,
        sub_values,
        lower_ok,
        upper_ok,
        pass,
    })
}

/// Outcome of comparing the nonzero spectrum of H against the union of the
/// nonzero Laplacian spectrum and the triangle block's nonzero spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSpectrumReport {
    pub pass: bool,
    pub h_nonzero: Vec<f64>,
    pub block_nonzero: Vec<f64>,
    pub unmatched_h: Vec<f64>,
    pub unmatched_block: Vec<f64>,
}

/// Greedy pairing of two descending lists: heads within `tol` match,
/// otherwise the larger head is declared unmatched and dropped.
fn greedy_multiset_diff(a: &[f64], b: &[f64], tol: f64) -> (Vec<f64>, Vec<f64>) {
    let (mut i, mut j) = (0, 0);
    let mut only_a = Vec::new();
    let mut only_b = Vec::new();
    while i < a.len() && j < b.len() {
        if libm::fabs(a[i] - b[j]) <= tol {
            i += 1;
            j += 1;
        } else if a[i] > b[j] {
            only_a.push(a[i]);
            i += 1;
        } else {
            only_b.push(b[j]);
            j += 1;
        }
    }
    only_a.extend_from_slice(&a[i..]);
    only_b.extend_from_slice(&b[j..]);
    (only_a, only_b)
}

/// Verifies that the nonzero eigenvalues of H are exactly the nonzero
/// eigenvalues of L together with the nonzero eigenvalues of 3I + A(G_△),
/// as multisets within [`TOL_MATCH`].
pub fn verify_block_spectrum(
    og: &OrientedGraph,
    t: &TriangleSet,
) -> Result<BlockSpectrumReport, EigenError> {
    verify_block_spectrum_with_tol(og, t, TOL_MATCH)
}

/// [`verify_block_spectrum`] with a caller-chosen tolerance, used both for
/// zero filtering and for multiset matching.
pub fn verify_block_spectrum_with_tol(
    og: &OrientedGraph,
    t: &TriangleSet,
    tol: f64,
) -> Result<BlockSpectrumReport, EigenError> {
    let h_all = sym_eigenvalues(&helmholtzian_direct(og, t))?;
    let mu = sym_eigenvalues(&laplacian(og))?;
    let eta_shifted = sym_eigenvalues(&triangle_block(og, t))?;

    let h_nonzero: Vec<f64> = h_all.into_iter().filter(|v| libm::fabs(*v) > tol).collect();
    let mut block_nonzero: Vec<f64> =
        mu.into_iter().chain(eta_shifted).filter(|v| libm::fabs(*v) > tol).collect();
    block_nonzero.sort_unstable_by(|x, y| y.total_cmp(x));

    let (unmatched_h, unmatched_block) = greedy_multiset_diff(&h_nonzero, &block_nonzero, tol);
    Ok(BlockSpectrumReport {
        pass: unmatched_h.is_empty() && unmatched_block.is_empty(),
        h_nonzero,
        block_nonzero,
        unmatched_h,
        unmatched_block,
    })
}

/// Exact nonnegative rational, kept reduced; just enough arithmetic for the
/// clique bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den > 0 && num >= 0);
        let g = gcd(num, den);
        Rational { num: num / g, den: den / g }
    }

    pub fn zero() -> Rational {
        Rational { num: 0, den: 1 }
    }

    pub fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// `count >= self`, compared exactly.
    pub fn is_met_by(&self, count: usize) -> bool {
        count as i64 * self.den >= self.num
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliqueError {
    /// The i-th vertex set does not induce a complete subgraph.
    NotAClique { index: usize },
    /// Cliques must have at least 3 vertices for the bound to apply.
    TooSmall { index: usize },
    /// Two of the cliques share an edge.
    OverlappingEdges { first: usize, second: usize },
    Eigen(EigenError),
}

impl fmt::Display for CliqueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueError::NotAClique { index } => write!(f, "vertex set {index} is not a clique"),
            CliqueError::TooSmall { index } => {
                write!(f, "clique {index} has fewer than 3 vertices")
            }
            CliqueError::OverlappingEdges { first, second } => {
                write!(f, "cliques {first} and {second} share an edge")
            }
            CliqueError::Eigen(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CliqueError {}

impl From<EigenError> for CliqueError {
    fn from(e: EigenError) -> CliqueError {
        CliqueError::Eigen(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliqueBoundReport {
    /// Σ C(s_i, 3) / (1 + 3(s_i − 3)) over the given cliques.
    pub bound: Rational,
    /// Number of H-eigenvalues ≥ 3 − 10⁻⁸.
    pub eigen_count: usize,
    /// eigen_count ≥ bound, compared against the exact rational.
    pub satisfied: bool,
}

/// Checks that edge-disjoint cliques of sizes s_i ≥ 3 force at least
/// Σ C(s_i,3)/(1+3(s_i−3)) H-eigenvalues ≥ 3.
pub fn clique_eigenvalue_bound(
    g: &Graph,
    cliques: &[Vec<usize>],
) -> Result<CliqueBoundReport, CliqueError> {
    let mut edge_owner = alloc::vec![usize::MAX; g.edge_count()];
    let mut bound = Rational::zero();
    for (idx, clique) in cliques.iter().enumerate() {
        let mut verts = clique.clone();
        verts.sort_unstable();
        verts.dedup();
        let s = verts.len() as i64;
        if s < 3 {
            return Err(CliqueError::TooSmall { index: idx });
        }
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                let e = g.edge_index(u, v).ok_or(CliqueError::NotAClique { index: idx })?;
                if edge_owner[e] != usize::MAX {
                    return Err(CliqueError::OverlappingEdges {
                        first: edge_owner[e],
                        second: idx,
                    });
                }
                edge_owner[e] = idx;
            }
        }
        bound = bound.add(Rational::new(s * (s - 1) * (s - 2) / 6, 1 + 3 * (s - 3)));
    }
    let values = h_spectrum_of(g)?;
    let eigen_count = values.iter().take_while(|&&v| v >= 3.0 - INTERLACING_SLACK).count();
    Ok(CliqueBoundReport { bound, eigen_count, satisfied: bound.is_met_by(eigen_count) })
}

/// λ₁(H) ≤ max{μ₁(L), 3·max_e △(e)}, within slack.
pub fn largest_eigenvalue_bound_check(
    og: &OrientedGraph,
    t: &TriangleSet,
) -> Result<bool, EigenError> {
    let lambda1 = sym_eigenvalues(&helmholtzian_direct(og, t))?.first().copied().unwrap_or(0.0);
    let mu1 = sym_eigenvalues(&laplacian(og))?.first().copied().unwrap_or(0.0);
    let max_deg = triangle_degrees(og.graph(), t).into_iter().max().unwrap_or(0);
    Ok(lambda1 <= mu1.max(3.0 * max_deg as f64) + INTERLACING_SLACK)
}

/// A graph where λ₁(H) and μ₁(L) disagree beyond tolerance. The graph is
/// identified by its vertex count and upper-triangle edge bitmask.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyViolation {
    pub n: usize,
    pub mask: u64,
    pub lambda1: f64,
    pub mu1: f64,
}

/// Compares λ₁(H) with μ₁(L) over every labeled graph with at least one
/// edge and at most `n_max` vertices; returns the disagreements.
pub fn conjecture_survey(n_max: usize) -> Result<Vec<SurveyViolation>, CheckError> {
    if n_max > crate::graph::ENUMERATION_MAX_VERTICES {
        return Err(CheckError::Graph(GraphError::TooManyVertices {
            n: n_max,
            max: crate::graph::ENUMERATION_MAX_VERTICES,
        }));
    }
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let mut stream = enumerate_all_graphs(n)?;
        let mut mask = 0u64;
        while let Some(g) = stream.next() {
            if g.edge_count() > 0 {
                let t = TriangleSet::enumerate(&g);
                let og = OrientedGraph::default_orientation(g);
                let lambda1 = sym_eigenvalues(&helmholtzian_direct(&og, &t))?[0];
                let mu1 = sym_eigenvalues(&laplacian(&og))?[0];
                if libm::fabs(lambda1 - mu1) > TOL_MATCH {
                    violations.push(SurveyViolation { n, mask, lambda1, mu1 });
                }
            }
            mask += 1;
        }
    }
    Ok(violations)
}
