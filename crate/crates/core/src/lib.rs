//! Graph Helmholtzian toolkit.
//!
//! For a finite simple graph G with oriented edges, the Helmholtzian is the
//! edge-indexed symmetric matrix H(G) = BBᵀ + CᵀC, where B is the
//! edge-vertex incidence matrix and C the triangle-edge incidence matrix.
//! This crate constructs H and its companion matrices in exact integer
//! arithmetic, computes their spectra, exposes the signed-graph structure H
//! encodes (balance, switching, reducibility, nonnegative orientations),
//! and ships checkers for the spectral identities these objects satisfy
//! (block decomposition, interlacing, clique bounds).
//!
//! The crate is `no_std` + `alloc`; IO, file formats, and the command-line
//! frontend live in the companion `hspec` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod eigen;
pub mod graph;
pub mod incidence;
pub mod matrix;
pub mod signed;
pub mod spectrum;

pub use checks::{
    clique_eigenvalue_bound, conjecture_survey, interlacing_check, largest_eigenvalue_bound_check,
    verify_block_spectrum, verify_block_spectrum_with_tol, BlockSpectrumReport, CheckError,
    CliqueBoundReport, CliqueError, InterlacingReport, Rational, SurveyViolation,
    INTERLACING_SLACK, PSD_FLOOR, TOL_MATCH,
};
pub use eigen::{jacobi_eigenvalues, sym_eigenvalues, EigenError};
pub use graph::{
    enumerate_all_graphs, graph_from_mask, pair_order, triangle_degrees, Graph, GraphError,
    GraphStream, OrientedGraph, TriangleSet, ENUMERATION_MAX_VERTICES,
};
pub use incidence::{
    edge_vertex_incidence, helmholtzian_direct, helmholtzian_product, hprime, lambda_signed,
    laplacian, triangle_block, triangle_edge_incidence, triangular_signed, ConsistencyError,
};
pub use matrix::{Label, RectMatrix, SymMatrix};
pub use signed::{
    add_twin, cycle_sign, find_nonnegative_orientation, induced_odd_cycle_ge5, is_balanced,
    is_irreducible, reducibility_partition, switching_equivalent, OrientationSearchResult,
    SignedGraph, SignedGraphError, SwitchingCertificate,
};
pub use spectrum::{
    closed_form_spectrum, group_spectrum, Family, FamilyError, Spectrum, DEFAULT_TOL_GROUP,
    DEFAULT_TOL_ZERO,
};
