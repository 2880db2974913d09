//! Fixed-point classification for Kuramoto oscillator networks, and the
//! ring analysis: twisted states, the stability indicator, its roots, and
//! the longest stable link.
//!
//! The Jacobian of the phase dynamics at a fixed point is the Laplacian of
//! the graph reweighted by `delta_ij * cos(theta_j - theta_i)`, so the
//! dimension of the unstable manifold is the positive-eigenvalue count
//! computed by the cycle-space index. A link whose phase gap exceeds a
//! quarter turn carries a negative Jacobian weight ("long" link).

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{WeightedGraph, MIN_WEIGHT_MAGNITUDE};
use crate::spectral::{index_via_cycles, Inertia};

/// Phases, natural frequencies, and the positively weighted coupling graph.
#[derive(Debug, Clone)]
pub struct PhaseConfiguration {
    pub theta: Vec<f64>,
    pub omega: Vec<f64>,
    pub coupling: WeightedGraph,
}

impl PhaseConfiguration {
    pub fn new(theta: Vec<f64>, omega: Vec<f64>, coupling: WeightedGraph) -> Result<Self> {
        let n = coupling.vertex_count();
        if theta.len() != n || omega.len() != n {
            return Err(Error::Dimension(format!(
                "theta ({}) and omega ({}) must match the {} coupling vertices",
                theta.len(),
                omega.len(),
                n
            )));
        }
        if let Some(e) = coupling.edges().iter().find(|e| e.weight <= 0.0) {
            return Err(Error::Spec(format!(
                "coupling weight on edge ({}, {}) must be positive, got {}",
                e.tail, e.head, e.weight
            )));
        }
        Ok(Self {
            theta,
            omega,
            coupling,
        })
    }
}

/// Residual of the phase-locking equations:
/// `r_i = omega_i + sum_j delta_ij sin(theta_j - theta_i)`.
pub fn fixed_point_residual(pc: &PhaseConfiguration) -> Vec<f64> {
    let mut residual = pc.omega.clone();
    for e in pc.coupling.edges() {
        let gap = pc.theta[e.head] - pc.theta[e.tail];
        residual[e.tail] += e.weight * gap.sin();
        residual[e.head] -= e.weight * gap.sin();
    }
    residual
}

/// The linearization graph: same edges as the coupling, weights
/// `delta_ij * cos(theta_j - theta_i)`. Its Laplacian is the Jacobian of
/// the dynamics at `theta`. Links sitting exactly at a quarter turn are
/// rejected, since the cycle form needs invertible weights.
pub fn jacobian_graph(pc: &PhaseConfiguration) -> Result<WeightedGraph> {
    let edges: Vec<(usize, usize, f64)> = pc
        .coupling
        .edges()
        .iter()
        .map(|e| {
            let weight = e.weight * (pc.theta[e.head] - pc.theta[e.tail]).cos();
            (e.tail, e.head, weight)
        })
        .collect();
    for &(u, v, w) in &edges {
        if w.abs() < MIN_WEIGHT_MAGNITUDE {
            return Err(Error::DegenerateWeight {
                u,
                v,
                weight: w,
                min: MIN_WEIGHT_MAGNITUDE,
            });
        }
    }
    WeightedGraph::new(pc.coupling.vertex_count(), &edges)
}

/// Stability classification of a phase-locked state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// Dimension of the unstable manifold: `n_plus` of the Jacobian.
    pub unstable_dim: usize,
    /// Kernel dimension of the Jacobian (1 for the rotation mode alone).
    pub zero_modes: usize,
}

/// Verifies `theta` is a fixed point to `residual_tol` in the sup norm,
/// then classifies it through the cycle-space index of the Jacobian graph.
pub fn classify_fixed_point(
    pc: &PhaseConfiguration,
    residual_tol: f64,
) -> Result<Classification> {
    let residual = fixed_point_residual(pc)
        .into_iter()
        .fold(0.0f64, |m, r| m.max(r.abs()));
    if residual > residual_tol {
        return Err(Error::NotAFixedPoint {
            residual,
            tol: residual_tol,
        });
    }
    let jacobian = jacobian_graph(pc)?;
    let Inertia { n_plus, n_zero, .. } = index_via_cycles(&jacobian)?;
    Ok(Classification {
        unstable_dim: n_plus,
        zero_modes: n_zero,
    })
}

const POLE_TOL: f64 = 1e-12;

/// Ring stability indicator `(n - 1) cos((n - 1) zeta) / cos(zeta) + 1`.
/// On the branch `cos(zeta) > 0`, the twisted state with gap `zeta` is a
/// stable fixed point iff this is positive. Rings need `n >= 3`.
pub fn stability_indicator(n: usize, zeta: f64) -> Result<f64> {
    assert!(n >= 3, "ring stability indicator needs n >= 3, got {n}");
    let cos_gap = zeta.cos();
    if cos_gap.abs() < POLE_TOL {
        return Err(Error::Pole(cos_gap.abs()));
    }
    let m = (n - 1) as f64;
    Ok(m * (m * zeta).cos() / cos_gap + 1.0)
}

/// Frequency profile that makes the twisted state `theta_k = k zeta` an
/// exact fixed point on the unit-weight ring: zero everywhere except the
/// endpoints of the wrap edge.
pub fn omega_profile(n: usize, zeta: f64) -> Vec<f64> {
    assert!(n >= 3, "ring frequency profile needs n >= 3, got {n}");
    let mut omega = vec![0.0; n];
    let wrap = ((n - 1) as f64 * zeta).sin() + zeta.sin();
    omega[n - 1] = wrap;
    omega[0] = -wrap;
    omega
}

/// Twisted state `theta_k = k zeta` on the unit-weight ring, with the
/// matching frequency profile.
pub fn twisted_configuration(n: usize, zeta: f64) -> PhaseConfiguration {
    let coupling = WeightedGraph::ring(&vec![1.0; n]).expect("ring construction");
    PhaseConfiguration::new(
        (0..n).map(|k| k as f64 * zeta).collect(),
        omega_profile(n, zeta),
        coupling,
    )
    .expect("twisted configuration dimensions agree")
}

/// Ring analysis at the first root of the stability indicator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingAnalysis {
    pub n: usize,
    /// First positive root of the stability indicator.
    pub zeta_star: f64,
    /// Wrap-link length as a fraction of the full turn: `n zeta* / 2 pi`.
    pub normalized_link: f64,
    /// Wrap frequency at the root.
    pub omega_wrap: f64,
    /// Whether the wrap link exceeds a quarter turn.
    pub is_long: bool,
}

/// All roots of the stability indicator in `(0, pi/2)`, isolated on a
/// fixed grid of step `pi / (2e4 (n - 1))` and refined by bisection until
/// the bracket is narrower than `tol`.
pub fn indicator_roots(n: usize, tol: f64) -> Result<Vec<f64>> {
    if n < 3 {
        return Err(Error::Spec(format!("ring analysis needs n >= 3, got {n}")));
    }
    let step = PI / (2e4 * (n - 1) as f64);
    let mut roots = Vec::new();
    let mut prev_zeta = 0.0;
    let mut prev_value = n as f64; // limit at zero
    let mut k = 1usize;
    loop {
        let zeta = k as f64 * step;
        if zeta >= FRAC_PI_2 - 0.5 * step {
            break;
        }
        let value = stability_indicator(n, zeta)?;
        if (prev_value > 0.0) != (value > 0.0) {
            roots.push(bisect_root(n, prev_zeta, zeta, tol)?);
        }
        prev_zeta = zeta;
        prev_value = value;
        k += 1;
    }
    Ok(roots)
}

fn bisect_root(n: usize, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut f_lo = if lo == 0.0 {
        n as f64
    } else {
        stability_indicator(n, lo)?
    };
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = stability_indicator(n, mid)?;
        if (f_lo > 0.0) == (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Wrap-link circle distance for the twisted state with gap `zeta`, as a
/// fraction of the full turn.
fn folded_link(n: usize, zeta: f64) -> f64 {
    let x = (n as f64 * zeta).rem_euclid(TAU);
    x.min(TAU - x) / TAU
}

fn is_long_link(n: usize, zeta: f64) -> bool {
    let x = (n as f64 * zeta).rem_euclid(TAU);
    x > FRAC_PI_2 && x < 3.0 * FRAC_PI_2
}

/// Longest stable wrap link on the ring of size `n`: the analysis at the
/// first root of the stability indicator, refined to `1e-12`. The first
/// root is expected to give the longest link among all roots; if a later
/// root beats it, a warning is logged and the first root still wins.
pub fn longest_stable_link(n: usize) -> Result<RingAnalysis> {
    longest_stable_link_with_tol(n, 1e-12)
}

pub fn longest_stable_link_with_tol(n: usize, tol: f64) -> Result<RingAnalysis> {
    let roots = indicator_roots(n, tol)?;
    let &first = roots.first().ok_or(Error::NoRoot)?;
    let analysis = RingAnalysis {
        n,
        zeta_star: first,
        normalized_link: n as f64 * first / TAU,
        omega_wrap: ((n - 1) as f64 * first).sin() + first.sin(),
        is_long: is_long_link(n, first),
    };
    let first_distance = folded_link(n, first);
    for &root in &roots[1..] {
        if is_long_link(n, root) && folded_link(n, root) > first_distance + 1e-12 {
            log::warn!(
                "ring n = {n}: root {root} yields a longer link than the first root {first}"
            );
        }
    }
    Ok(analysis)
}

/// One sample of the ring curves: the stability indicator (absent at
/// poles), the wrap frequency, and the cosine of the wrap gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub zeta: f64,
    pub indicator: Option<f64>,
    pub omega_wrap: f64,
    pub cos_wrap: f64,
}

/// Samples the ring curves on `steps` evenly spaced points of
/// `[zeta_min, zeta_max]`.
pub fn ring_scan(n: usize, zeta_min: f64, zeta_max: f64, steps: usize) -> Vec<ScanRow> {
    assert!(n >= 3, "ring scan needs n >= 3, got {n}");
    let m = (n - 1) as f64;
    (0..steps)
        .map(|i| {
            let zeta = if steps == 1 {
                zeta_min
            } else {
                zeta_min + (zeta_max - zeta_min) * i as f64 / (steps - 1) as f64
            };
            ScanRow {
                zeta,
                indicator: stability_indicator(n, zeta).ok(),
                omega_wrap: (m * zeta).sin() + zeta.sin(),
                cos_wrap: (m * zeta).cos(),
            }
        })
        .collect()
}
