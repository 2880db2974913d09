//! Machine-readable report emitted by every subcommand.

use cycleform::{Inertia, RingAnalysis, ScanRow};
use serde::{Deserialize, Serialize};

/// Envelope common to all commands. All result fields are deterministic
/// for identical inputs and flags; `timing_ms` is informational only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub results: Results,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Index(IndexResults),
    Detred(DetredResults),
    RingTable(RingTableResults),
    RingScan(RingScanResults),
    Classify(ClassifyResults),
    Cover(CoverResults),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexResults {
    pub method: String,
    pub vertices: usize,
    pub edges: usize,
    pub cycle_rank: usize,
    pub negative_edges: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Inertia>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct: Option<Inertia>,
    /// Set when the reported kernel dimension exceeds one (degenerate
    /// weights).
    pub degenerate_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetredResults {
    pub vertices: usize,
    pub edges: usize,
    /// Reduced determinant of the Laplacian over the vertex count.
    pub lhs: f64,
    /// Cycle-form determinant times the product of edge weights.
    pub rhs: f64,
    /// `|lhs / rhs|`.
    pub ratio: f64,
    pub sign_factor: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingTableResults {
    pub rows: Vec<RingAnalysis>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingScanResults {
    pub n: usize,
    pub rows: Vec<ScanRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedEdge {
    pub tail: usize,
    pub head: usize,
    /// Jacobian weight `delta * cos(gap)`.
    pub weight: f64,
    /// Whether the phase gap exceeds a quarter turn.
    pub long: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyResults {
    pub unstable_dim: usize,
    pub zero_modes: usize,
    pub edges: Vec<ClassifiedEdge>,
    pub long_links: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverEdge {
    pub tail: usize,
    pub head: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverResults {
    pub vertices_g: usize,
    pub vertices_t: usize,
    pub cycle_rank: usize,
    pub edges: Vec<CoverEdge>,
    /// Vertex map from the fundamental domain back to the input graph.
    pub phi: Vec<usize>,
}
