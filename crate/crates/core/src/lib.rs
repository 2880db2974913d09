//! Spectral index of signed-weight graph Laplacians through the cycle
//! space, with an application to phase-locked states of Kuramoto
//! oscillator networks.
//!
//! For a connected graph whose edge weights may be negative, the number of
//! positive Laplacian eigenvalues (the dimension of the unstable manifold
//! in the coupled-oscillator setting) equals the number of negative edges
//! minus the positive-eigenvalue count of a small `C x C` form living on
//! the cycle space, where `C = |E| - |V| + 1`. For sparse graphs this
//! replaces a `|V| x |V|` eigenproblem with a much smaller one.
//!
//! The crate provides:
//!
//! - [`graph`]: weighted simple graphs, edge-list/JSON loading, incidence
//!   matrices, spanning trees and fundamental cycle bases;
//! - [`cover`]: the covering-tree fundamental domain and the projection
//!   matrices that realize the graph Laplacian as a restricted tree
//!   Laplacian;
//! - [`spectral`]: Laplacians, inertia, the cycle form, the cycle-space
//!   index formula, sign-topology bounds, the mixed-cycle Schur reduction,
//!   the reduced-determinant duality, and closed-form stability
//!   thresholds for one- and two-cycle graphs;
//! - [`kuramoto`]: fixed-point classification for oscillator networks and
//!   the ring analysis (twisted states, stability indicator, longest
//!   stable link);
//! - [`oracle`]: a self-contained Jacobi eigensolver, seeded random graph
//!   generation, and the brute-force reference index used to verify the
//!   cycle-space path;
//! - [`linalg`]: small dense helpers (LU determinant/solve, orthonormal
//!   bases, exact integer rank).

pub mod cover;
pub mod error;
pub mod graph;
pub mod kuramoto;
pub mod linalg;
pub mod oracle;
pub mod spectral;

pub use cover::{
    build_cover, build_projections, cycle_basis_via_cover, laplacian_restriction_check,
    CoverDomain, ProjectionPair,
};
pub use error::{Error, Result};
pub use graph::{load_graph, CycleBasis, Edge, IncidenceMatrix, SignFilter, SpanningTree, WeightedGraph};
pub use kuramoto::{
    classify_fixed_point, longest_stable_link, ring_scan, stability_indicator, Classification,
    PhaseConfiguration, RingAnalysis, ScanRow,
};
pub use spectral::{
    cycle_form, det_red, detred_identity_check, index_bounds, index_via_cycles,
    index_via_cycles_with_tol, inertia, laplacian, mixed_cycle_reduction, CycleForm,
    DetRedReport, Inertia, MixedCycleReduction,
};
