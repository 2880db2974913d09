//! Fundamental domain of the universal cover and its projection matrices.
//!
//! For a connected graph `G`, the fundamental domain `T` is a weighted tree
//! carrying each edge of `G` exactly once, together with a vertex map
//! `phi: V(T) -> V(G)` that is a graph homomorphism preserving weights.
//! Identifying the duplicated vertices of `T` recovers `G`, which at the
//! linear-algebra level restricts the tree Laplacian to a subspace; the
//! orthogonal complement is spanned by the duplicate-contrast columns of
//! `Q` and carries the cycle form.
//!
//! The tree is built directly, without materializing the infinite
//! universal cover: the original vertices joined by the spanning-tree
//! edges form the primary copies, and every non-tree edge is reattached to
//! a fresh leaf duplicating its head.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::graph::{parent_path_vector, CycleBasis, SpanningTree, WeightedGraph};
use crate::linalg::max_asymmetry;
use crate::spectral::laplacian;

/// Fundamental domain `T` with the covering data.
#[derive(Debug, Clone)]
pub struct CoverDomain {
    /// The tree: `|E(G)|` edges, `|E(G)| + 1` vertices.
    pub tree: WeightedGraph,
    /// Vertex map `V(T) -> V(G)`.
    pub phi: Vec<usize>,
    /// T-edge index -> G-edge index, weight preserving.
    pub edge_correspondence: Vec<usize>,
    /// Primary representative in `V(T)` of each vertex of `G`.
    pub primary: Vec<usize>,
}

/// The 0/1 vertex-indicator matrix `X` (`N_T x N_G`, `X[a, v] = 1` iff
/// `phi(a) = v`) and the duplicate-contrast matrix `Q` (`N_T x C`, one
/// column per duplicate vertex: `+1` there, `-1` at the primary copy).
#[derive(Debug, Clone)]
pub struct ProjectionPair {
    pub x: Array2<i64>,
    pub q: Array2<i64>,
}

/// Builds the fundamental domain over the given spanning tree. The
/// primary representatives are the original vertices; every non-tree edge
/// `(u, v)` gets a fresh leaf `v'` with `phi(v') = v`, attached to `u`
/// with the same weight.
pub fn build_cover(g: &WeightedGraph, tree: &SpanningTree) -> Result<CoverDomain> {
    let n = g.vertex_count();
    let edges = g.edges();

    // T edges are stored at the same indices as the corresponding G edges,
    // so the edge correspondence is the identity and the weight diagonal
    // carries over unchanged.
    let mut t_edges: Vec<(usize, usize, f64)> = Vec::with_capacity(edges.len());
    let mut phi: Vec<usize> = (0..n).collect();
    let mut next_leaf = n;
    for (idx, e) in edges.iter().enumerate() {
        if tree.tree_edges.binary_search(&idx).is_ok() {
            t_edges.push((e.tail, e.head, e.weight));
        } else {
            phi.push(e.head);
            t_edges.push((e.tail, next_leaf, e.weight));
            next_leaf += 1;
        }
    }
    let tree_graph = WeightedGraph::new(next_leaf, &t_edges)?;
    if !tree_graph.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(CoverDomain {
        tree: tree_graph,
        phi,
        edge_correspondence: (0..edges.len()).collect(),
        primary: (0..n).collect(),
    })
}

/// Assembles the projection matrices from the covering data.
pub fn build_projections(cover: &CoverDomain) -> ProjectionPair {
    let n_t = cover.tree.vertex_count();
    let n_g = cover.primary.len();
    let mut x = Array2::zeros((n_t, n_g));
    for (a, &v) in cover.phi.iter().enumerate() {
        x[[a, v]] = 1;
    }
    let duplicates: Vec<usize> = (0..n_t)
        .filter(|&a| cover.primary[cover.phi[a]] != a)
        .collect();
    let mut q = Array2::zeros((n_t, duplicates.len()));
    for (col, &w) in duplicates.iter().enumerate() {
        q[[w, col]] = 1;
        q[[cover.primary[cover.phi[w]], col]] = -1;
    }
    ProjectionPair { x, q }
}

/// Checks the restriction identity `X^T L_T X = L_G` entrywise, to
/// `1e-12` absolute.
pub fn laplacian_restriction_check(
    g: &WeightedGraph,
    cover: &CoverDomain,
    projections: &ProjectionPair,
) -> bool {
    let l_g = laplacian(g);
    let l_t = laplacian(&cover.tree);
    let xf = projections.x.mapv(|v| v as f64);
    let restricted = xf.t().dot(&l_t).dot(&xf);
    let diff = &restricted - &l_g;
    max_asymmetry(&diff) <= 1e-12 && diff.iter().all(|x| x.abs() <= 1e-12)
}

/// Derives a cycle basis of `G` from the covering data: for each column
/// of `Q`, the unique signed edge path in `T` from the duplicate vertex
/// back to its primary representative solves `B_T r = q`, and mapping the
/// path through the edge correspondence lands it in the nullspace of
/// `B_G`.
pub fn cycle_basis_via_cover(cover: &CoverDomain, _projections: &ProjectionPair) -> CycleBasis {
    let t = &cover.tree;
    let n_t = t.vertex_count();
    let t_tree = t
        .spanning_tree()
        .expect("fundamental domain is a connected tree");
    debug_assert!(t_tree.non_tree_edges.is_empty());

    let g_edge_count = cover.edge_correspondence.len();
    let duplicates: Vec<usize> = (0..n_t)
        .filter(|&a| cover.primary[cover.phi[a]] != a)
        .collect();
    let mut vectors = Array2::zeros((g_edge_count, duplicates.len()));
    let mut weights = vec![0.0; g_edge_count];
    for (t_idx, &g_idx) in cover.edge_correspondence.iter().enumerate() {
        weights[g_idx] = t.edges()[t_idx].weight;
    }
    for (col, &w) in duplicates.iter().enumerate() {
        let target = cover.primary[cover.phi[w]];
        let path = parent_path_vector(t.edges(), &t_tree.parent, w, target);
        for (t_idx, &v) in path.iter().enumerate() {
            vectors[[cover.edge_correspondence[t_idx], col]] = v;
        }
    }
    CycleBasis { vectors, weights }
}
