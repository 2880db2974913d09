//! Independent brute-force verification layer: a dense symmetric
//! eigensolver, seeded random graph generation, and a reference inertia
//! computation that never touches the cycle-space machinery.

use ndarray::Array2;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{WeightedGraph, MIN_WEIGHT_MAGNITUDE};
use crate::linalg::max_asymmetry;
use crate::spectral::Inertia;

/// Full eigendecomposition of a symmetric matrix. Eigenvalues ascending,
/// eigenvectors as matched columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Array2<f64>,
}

const SYMMETRY_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver. Plane rotations annihilate one off-diagonal
/// entry at a time; sweeps repeat until the off-diagonal Frobenius norm
/// drops below `1e-12 * ||M||_F`. Unconditionally convergent for symmetric
/// matrices, which is the whole point of using it as the oracle.
pub fn sym_eigen(m: &Array2<f64>) -> Result<EigenDecomposition> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Dimension(format!(
            "eigensolver needs a square matrix, got {} x {}",
            n,
            m.ncols()
        )));
    }
    let asym = max_asymmetry(m);
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }

    let mut a = 0.5 * (m + &m.t());
    let mut v = Array2::eye(n);
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n > 1 && norm > 0.0 {
        let target = 1e-12 * norm;
        for _sweep in 0..MAX_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
                .map(|(p, q)| a[[p, q]] * a[[p, q]])
                .sum::<f64>()
                .sqrt()
                * std::f64::consts::SQRT_2;
            if off <= target {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[[p, q]];
                    if apq == 0.0 {
                        continue;
                    }
                    let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    let app = a[[p, p]];
                    let aqq = a[[q, q]];
                    a[[p, p]] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                    a[[q, q]] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                    a[[p, q]] = 0.0;
                    a[[q, p]] = 0.0;
                    for k in 0..n {
                        if k != p && k != q {
                            let akp = a[[k, p]];
                            let akq = a[[k, q]];
                            a[[k, p]] = c * akp - s * akq;
                            a[[p, k]] = a[[k, p]];
                            a[[k, q]] = s * akp + c * akq;
                            a[[q, k]] = a[[k, q]];
                        }
                    }
                    for k in 0..n {
                        let vkp = v[[k, p]];
                        let vkq = v[[k, q]];
                        v[[k, p]] = c * vkp - s * vkq;
                        v[[k, q]] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[[i, i]].total_cmp(&a[[j, j]]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[[i, i]]).collect();
    let mut eigenvectors = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..n {
            eigenvectors[[k, dst]] = v[[k, src]];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Counts eigenvalues above, inside and below the zero band
/// `[-tau, tau]`, where `tau = tol * max(1, max |lambda|)`.
pub fn count_inertia(eigenvalues: &[f64], tol: f64) -> Inertia {
    let radius = eigenvalues.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let tau = tol * radius.max(1.0);
    let mut inertia = Inertia::default();
    for &lambda in eigenvalues {
        if lambda > tau {
            inertia.n_plus += 1;
        } else if lambda < -tau {
            inertia.n_minus += 1;
        } else {
            inertia.n_zero += 1;
        }
    }
    inertia
}

/// Parameters for seeded random connected graph generation. Weight
/// magnitudes are uniform on `[weight_min, weight_max]`; each edge is
/// negated with probability `negative_probability`.
#[derive(Debug, Clone)]
pub struct RandomGraphSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Edge-count range, clamped per drawn vertex count to the feasible
    /// `[n - 1, n (n - 1) / 2]` band.
    pub min_edges: usize,
    pub max_edges: usize,
    pub weight_min: f64,
    pub weight_max: f64,
    pub negative_probability: f64,
    pub seed: u64,
}

impl RandomGraphSpec {
    fn validate(&self) -> Result<()> {
        if self.min_vertices < 2 || self.min_vertices > self.max_vertices {
            return Err(Error::Spec(format!(
                "invalid vertex range [{}, {}]",
                self.min_vertices, self.max_vertices
            )));
        }
        if self.weight_min < MIN_WEIGHT_MAGNITUDE || self.weight_min > self.weight_max {
            return Err(Error::Spec(format!(
                "invalid weight magnitude range [{}, {}]",
                self.weight_min, self.weight_max
            )));
        }
        if !(0.0..=1.0).contains(&self.negative_probability) {
            return Err(Error::Spec(format!(
                "negative probability {} outside [0, 1]",
                self.negative_probability
            )));
        }
        Ok(())
    }
}

/// Generates a connected simple graph, deterministically under the spec's
/// seed: a uniformly attached random spanning tree first, then extra
/// non-parallel edges. Connectivity holds by construction.
pub fn random_connected_graph(spec: &RandomGraphSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = rng.random_range(spec.min_vertices..=spec.max_vertices);
    let max_possible = n * (n - 1) / 2;
    let lo = spec.min_edges.max(n - 1);
    let hi = spec.max_edges.min(max_possible);
    if lo > hi {
        return Err(Error::Spec(format!(
            "edge range [{}, {}] infeasible for {} vertices",
            spec.min_edges, spec.max_edges, n
        )));
    }
    let m = rng.random_range(lo..=hi);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::HashSet::new();
    let mut pairs = Vec::with_capacity(m);
    for i in 1..n {
        let anchor = order[rng.random_range(0..i)];
        let (u, v) = (order[i].min(anchor), order[i].max(anchor));
        present.insert((u, v));
        pairs.push((u, v));
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !present.contains(p))
        .collect();
    candidates.shuffle(&mut rng);
    pairs.extend(candidates.into_iter().take(m - (n - 1)));

    let edges: Vec<(usize, usize, f64)> = pairs
        .into_iter()
        .map(|(u, v)| {
            let magnitude = rng.random_range(spec.weight_min..=spec.weight_max);
            let sign = if rng.random_bool(spec.negative_probability) {
                -1.0
            } else {
                1.0
            };
            (u, v, sign * magnitude)
        })
        .collect();
    WeightedGraph::new(n, &edges)
}

/// Reference spectral index: assembles the Laplacian densely with its own
/// loop and counts eigenvalue signs from the Jacobi decomposition. This is
/// the route the cycle-space index is checked against, so it shares no
/// code with the cycle path.
pub fn brute_force_index(g: &WeightedGraph) -> Inertia {
    let n = g.vertex_count();
    let mut l = Array2::zeros((n, n));
    for e in g.edges() {
        l[[e.tail, e.head]] += e.weight;
        l[[e.head, e.tail]] += e.weight;
        l[[e.tail, e.tail]] -= e.weight;
        l[[e.head, e.head]] -= e.weight;
    }
    let dec = sym_eigen(&l).expect("laplacian assembly is symmetric");
    count_inertia(&dec.eigenvalues, 1e-9)
}
