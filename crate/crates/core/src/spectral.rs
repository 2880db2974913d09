//! Laplacian assembly, inertia, the cycle intersection form, the
//! cycle-space index formula, sign-topology bounds, the mixed-cycle Schur
//! reduction, and the reduced-determinant duality.
//!
//! Sign convention: the Laplacian used throughout is the negative of the
//! textbook one, so an all-positive connected graph is negative
//! semidefinite and instability shows up as positive eigenvalues. The
//! central identity is
//!
//! ```text
//! n_plus(L_G) = #{negative edges} - n_plus(Z_G),   Z_G = -Y^T D^{-1} Y
//! ```
//!
//! which moves the index computation from the vertex space (dimension |V|)
//! to the cycle space (dimension C = |E| - |V| + 1).

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleBasis, SignFilter, WeightedGraph};
use crate::linalg;
use crate::oracle::{count_inertia, sym_eigen};

/// Relative zero threshold used when counting eigenvalue signs.
pub const DEFAULT_INERTIA_TOL: f64 = 1e-9;

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn dimension(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// Laplacian in the sign convention above: off-diagonal `gamma_vw`,
/// diagonal `-sum_u gamma_vu`. Row sums vanish.
pub fn laplacian(g: &WeightedGraph) -> Array2<f64> {
    let n = g.vertex_count();
    let mut l = Array2::zeros((n, n));
    for e in g.edges() {
        l[[e.tail, e.head]] += e.weight;
        l[[e.head, e.tail]] += e.weight;
        l[[e.tail, e.tail]] -= e.weight;
        l[[e.head, e.head]] -= e.weight;
    }
    l
}

/// Inertia of a symmetric matrix with zero band `tol * max(1, radius)`.
pub fn inertia(m: &Array2<f64>, tol: f64) -> Result<Inertia> {
    let dec = sym_eigen(m)?;
    Ok(count_inertia(&dec.eigenvalues, tol))
}

/// The cycle intersection form `Z = -Y^T D^{-1} Y` over a cycle basis.
#[derive(Debug, Clone)]
pub struct CycleForm {
    pub matrix: Array2<f64>,
    pub basis: CycleBasis,
}

pub fn cycle_form(g: &WeightedGraph, basis: &CycleBasis) -> CycleForm {
    CycleForm {
        matrix: form_from_vectors(&basis.vectors, &g.weights()),
        basis: basis.clone(),
    }
}

fn form_from_vectors(vectors: &Array2<i64>, weights: &[f64]) -> Array2<f64> {
    let y = vectors.mapv(|v| v as f64);
    let mut scaled = y.clone();
    for (mut row, &w) in scaled.rows_mut().into_iter().zip(weights) {
        row.mapv_inplace(|x| x / w);
    }
    -y.t().dot(&scaled)
}

/// Spectral index of the Laplacian computed on the cycle space:
/// `n_plus = #neg - n_plus(Z)`, `n_zero = 1 + n_zero(Z)`, remainder
/// negative. Never assembles or diagonalizes the |V| x |V| Laplacian.
pub fn index_via_cycles(g: &WeightedGraph) -> Result<Inertia> {
    index_via_cycles_with_tol(g, DEFAULT_INERTIA_TOL)
}

pub fn index_via_cycles_with_tol(g: &WeightedGraph, tol: f64) -> Result<Inertia> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree = g.spanning_tree()?;
    let basis = g.cycle_basis(&tree);
    let z = cycle_form(g, &basis);
    let zi = inertia(&z.matrix, tol)?;
    Ok(index_from_cycle_inertia(g, zi))
}

fn index_from_cycle_inertia(g: &WeightedGraph, zi: Inertia) -> Inertia {
    let n = g.vertex_count();
    let n_plus = g.negative_edge_count().saturating_sub(zi.n_plus);
    let n_zero = 1 + zi.n_zero;
    Inertia {
        n_plus,
        n_zero,
        n_minus: n.saturating_sub(n_plus + n_zero),
    }
}

/// Sign-topology bounds on `n_plus(L)`: the component count of the
/// positive subgraph minus one from below, vertices minus components of
/// the negative subgraph from above. Isolated vertices count as
/// components on both sides.
pub fn index_bounds(g: &WeightedGraph) -> (usize, usize) {
    let (pos_components, _) = g.connected_components(SignFilter::PositiveOnly);
    let (neg_components, _) = g.connected_components(SignFilter::NegativeOnly);
    (
        pos_components.saturating_sub(1),
        g.vertex_count() - neg_components,
    )
}

/// Cycle basis split into monochrome and mixed parts, with the partitioned
/// blocks of the cycle form and the index recovered through the Schur
/// complement on the mixed block.
#[derive(Debug, Clone)]
pub struct MixedCycleReduction {
    /// Cycles supported on positive edges only, as columns over the edge set.
    pub plus_basis: Array2<i64>,
    /// Cycles supported on negative edges only.
    pub minus_basis: Array2<i64>,
    /// Completion to a full cycle basis; greedy over the fundamental
    /// cycles in edge-index order.
    pub mixed_basis: Array2<i64>,
    /// Mixed-mixed block of the partitioned form.
    pub mixed_block: Array2<f64>,
    /// Mixed against positive-monochrome coupling block.
    pub plus_coupling: Array2<f64>,
    /// Mixed against negative-monochrome coupling block.
    pub minus_coupling: Array2<f64>,
    /// Cycle form of the positive subgraph (negative definite).
    pub plus_form: Array2<f64>,
    /// Cycle form of the negative subgraph (positive definite).
    pub minus_form: Array2<f64>,
    /// Inertia of the full cycle form recovered from the reduction.
    pub z_inertia: Inertia,
}

/// Splits the cycle space along edge signs and recomputes `n_plus(Z)` as
/// `dim S_minus + n_plus` of the mixed-block Schur complement. Must agree
/// with the direct eigensolve of `Z`.
pub fn mixed_cycle_reduction(g: &WeightedGraph) -> Result<MixedCycleReduction> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree = g.spanning_tree()?;
    let fundamental = g.cycle_basis(&tree);
    let c = fundamental.cycle_count();
    let m = g.edge_count();
    let weights = g.weights();

    let plus_vectors = subgraph_cycle_vectors(g, |w| w > 0.0);
    let minus_vectors = subgraph_cycle_vectors(g, |w| w < 0.0);
    let p = plus_vectors.len();
    let q = minus_vectors.len();

    // Greedy completion: keep fundamental cycles that grow the exact rank.
    let mut columns: Vec<Vec<i64>> = Vec::new();
    columns.extend(plus_vectors.iter().cloned());
    columns.extend(minus_vectors.iter().cloned());
    let mut mixed: Vec<Vec<i64>> = Vec::new();
    let mut rank = linalg::int_rank(&stack_columns(m, &columns));
    debug_assert_eq!(rank, p + q, "monochrome cycle spaces overlap");
    for col in fundamental.vectors.columns() {
        if rank == c {
            break;
        }
        let candidate: Vec<i64> = col.to_vec();
        columns.push(candidate.clone());
        let new_rank = linalg::int_rank(&stack_columns(m, &columns));
        if new_rank > rank {
            rank = new_rank;
            mixed.push(candidate);
        } else {
            columns.pop();
        }
    }
    debug_assert_eq!(rank, c, "completion failed to reach the cycle rank");

    // Partitioned basis order: mixed, then positive, then negative.
    let mut ordered: Vec<Vec<i64>> = Vec::with_capacity(c);
    ordered.extend(mixed.iter().cloned());
    ordered.extend(plus_vectors.iter().cloned());
    ordered.extend(minus_vectors.iter().cloned());
    let full = stack_columns(m, &ordered);
    let z = form_from_vectors(&full, &weights);

    let k = mixed.len();
    let mixed_block = z.slice(ndarray::s![0..k, 0..k]).to_owned();
    let plus_coupling = z.slice(ndarray::s![0..k, k..k + p]).to_owned();
    let minus_coupling = z.slice(ndarray::s![0..k, k + p..c]).to_owned();
    let plus_form = z.slice(ndarray::s![k..k + p, k..k + p]).to_owned();
    let minus_form = z.slice(ndarray::s![k + p..c, k + p..c]).to_owned();

    let mut schur = mixed_block.clone();
    if p > 0 && k > 0 {
        let w = linalg::solve(&plus_form, &plus_coupling.t().to_owned())
            .ok_or(Error::SingularCycleForm)?;
        schur = schur - plus_coupling.dot(&w);
    }
    if q > 0 && k > 0 {
        let w = linalg::solve(&minus_form, &minus_coupling.t().to_owned())
            .ok_or(Error::SingularCycleForm)?;
        schur = schur - minus_coupling.dot(&w);
    }
    let schur_inertia = inertia(&schur, DEFAULT_INERTIA_TOL)?;
    let z_inertia = Inertia {
        n_plus: q + schur_inertia.n_plus,
        n_zero: schur_inertia.n_zero,
        n_minus: p + schur_inertia.n_minus,
    };

    Ok(MixedCycleReduction {
        plus_basis: stack_columns(m, &plus_vectors),
        minus_basis: stack_columns(m, &minus_vectors),
        mixed_basis: stack_columns(m, &mixed),
        mixed_block,
        plus_coupling,
        minus_coupling,
        plus_form,
        minus_form,
        z_inertia,
    })
}

fn stack_columns(rows: usize, columns: &[Vec<i64>]) -> Array2<i64> {
    let mut out = Array2::zeros((rows, columns.len()));
    for (j, col) in columns.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            out[[i, j]] = v;
        }
    }
    out
}

/// Fundamental cycles of the subgraph keeping the edges passing `pred`,
/// as vectors over the full edge set. A BFS forest replaces the spanning
/// tree since the subgraph may be disconnected.
fn subgraph_cycle_vectors(g: &WeightedGraph, pred: impl Fn(f64) -> bool) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut in_forest = vec![false; edges.len()];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if pred(edges[e].weight) && !visited[w] {
                    visited[w] = true;
                    parent[w] = Some((v, e));
                    in_forest[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut vectors = Vec::new();
    for (idx, e) in edges.iter().enumerate() {
        if !pred(e.weight) || in_forest[idx] {
            continue;
        }
        // both endpoints already connected inside the forest component
        let mut vec = crate::graph::parent_path_vector(edges, &parent, e.head, e.tail);
        vec[idx] += 1;
        vectors.push(vec);
    }
    vectors
}

/// Determinant of a connected-graph Laplacian restricted to the zero-sum
/// subspace, via an orthonormal basis of the complement of the ones
/// vector. Errors with `DegenerateKernel` when the kernel is not simple;
/// by convention the reduced determinant is zero there.
pub fn det_red(l: &Array2<f64>) -> Result<f64> {
    let n = l.nrows();
    let asym = linalg::max_asymmetry(l);
    if asym > 1e-10 {
        return Err(Error::NotSymmetric(asym));
    }
    let scale = l.iter().fold(0.0f64, |m, &x| m.max(x.abs())).max(1.0);
    for row in l.rows() {
        if row.sum().abs() > 1e-9 * scale {
            return Err(Error::Dimension(
                "kernel does not contain the constant vector; not a Laplacian".into(),
            ));
        }
    }
    let dec = sym_eigen(l)?;
    let counts = count_inertia(&dec.eigenvalues, DEFAULT_INERTIA_TOL);
    if counts.n_zero != 1 {
        return Err(Error::DegenerateKernel {
            n_zero: counts.n_zero,
        });
    }
    let p = linalg::zero_sum_basis(n);
    Ok(linalg::det(&p.t().dot(l).dot(&p)))
}

/// Both sides of the reduced-determinant duality, compared in magnitude.
/// The empirical sign factor `lhs / rhs` is reported, not asserted; on
/// every instance exercised by the test suite it equals `(-1)^|E|`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct DetRedReport {
    /// `det_red(L) / |V|`.
    pub lhs: f64,
    /// `det(Z) * prod of edge weights`.
    pub rhs: f64,
    /// `|lhs / rhs|`; 1 up to roundoff when the identity holds.
    pub ratio: f64,
    /// Sign of `lhs / rhs`, `+1` or `-1`.
    pub sign_factor: i32,
}

pub fn detred_identity_check(g: &WeightedGraph) -> Result<DetRedReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree = g.spanning_tree()?;
    let basis = g.cycle_basis(&tree);
    let z = cycle_form(g, &basis);
    let det_z = linalg::det(&z.matrix);
    if det_z.abs() < 1e-12 {
        return Err(Error::SingularCycleForm);
    }
    let product: f64 = g.weights().iter().product();
    let rhs = det_z * product;
    let lhs = det_red(&laplacian(g))? / g.vertex_count() as f64;
    Ok(DetRedReport {
        lhs,
        rhs,
        ratio: (lhs / rhs).abs(),
        sign_factor: if lhs / rhs >= 0.0 { 1 } else { -1 },
    })
}

/// Critical weight for the designated edge of a one-cycle (ring) graph:
/// `-1 / sum of reciprocal weights over the other slots`. The Laplacian
/// is stable iff the designated weight exceeds the returned value.
pub fn threshold_one_cycle(weights: &[f64], negative_index: usize) -> f64 {
    assert!(negative_index < weights.len());
    let reciprocal_sum: f64 = weights
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != negative_index)
        .map(|(_, &w)| 1.0 / w)
        .sum();
    -1.0 / reciprocal_sum
}

/// Stability bound for a two-cycle graph whose positive edges all weigh
/// `gamma` and whose single negative edge sits on the shared path: stable
/// iff the reciprocal of the negative weight lies below the returned
/// bound on `1 / gamma_e`.
pub fn threshold_two_cycle(k1: usize, k2: usize, k12: usize, gamma: f64) -> f64 {
    assert!(k1 >= 1 && k2 >= 1 && k12 >= 1);
    assert!(gamma > 0.0);
    let (k1, k2, k12) = (k1 as f64, k2 as f64, k12 as f64);
    -(k1 * k2 / (k1 + k2) + (k12 - 1.0)) / gamma
}
