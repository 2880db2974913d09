//! Weighted-graph representation, incidence matrix, spanning trees and
//! fundamental cycle bases.
//!
//! Graphs are simple and undirected with signed real edge weights. Every
//! stored edge carries the canonical orientation `tail < head`; the sign
//! bookkeeping for cycles lives in the incidence and cycle-basis matrices,
//! which use exact integer entries.

use std::collections::{HashMap, HashSet, VecDeque};

use ndarray::Array2;
use serde::Deserialize;

use crate::error::{Error, Result};

/// Smallest admissible edge-weight magnitude. The cycle form inverts the
/// diagonal weight matrix, so weights closer to zero are rejected at
/// construction time.
pub const MIN_WEIGHT_MAGNITUDE: f64 = 1e-12;

/// An oriented edge with `tail < head`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub weight: f64,
}

/// Edge filter used when counting connected components of the positive or
/// negative subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignFilter {
    All,
    PositiveOnly,
    NegativeOnly,
}

impl SignFilter {
    fn passes(self, weight: f64) -> bool {
        match self {
            SignFilter::All => true,
            SignFilter::PositiveOnly => weight > 0.0,
            SignFilter::NegativeOnly => weight < 0.0,
        }
    }
}

/// Undirected simple graph with signed, nonzero edge weights.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// adjacency[v] = (neighbor, edge index), sorted ascending by neighbor.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl WeightedGraph {
    /// Builds a graph from `(tail, head, weight)` triples. Orientation is
    /// canonicalized to `tail < head`; the edge order of the input is kept.
    pub fn new(vertex_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Dimension(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if !w.is_finite() || w.abs() < MIN_WEIGHT_MAGNITUDE {
                return Err(Error::DegenerateWeight {
                    u,
                    v,
                    weight: w,
                    min: MIN_WEIGHT_MAGNITUDE,
                });
            }
            let (tail, head) = (u.min(v), u.max(v));
            if !seen.insert((tail, head)) {
                return Err(Error::DuplicateEdge { u, v });
            }
            stored.push(Edge { tail, head, weight: w });
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        for (idx, e) in stored.iter().enumerate() {
            adjacency[e.tail].push((e.head, idx));
            adjacency[e.head].push((e.tail, idx));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok(Self {
            vertex_count,
            edges: stored,
            adjacency,
        })
    }

    /// Ring on `n >= 3` vertices; edge `i` joins vertices `i` and `i + 1`
    /// (the wrap edge is stored as `(0, n - 1)`).
    pub fn ring(weights: &[f64]) -> Result<Self> {
        let n = weights.len();
        if n < 3 {
            return Err(Error::Spec(format!("ring needs >= 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n)
            .map(|i| (i, (i + 1) % n, weights[i]))
            .collect();
        Self::new(n, &edges)
    }

    /// Path on `weights.len() + 1` vertices.
    pub fn path(weights: &[f64]) -> Result<Self> {
        let edges: Vec<_> = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (i, i + 1, w))
            .collect();
        Self::new(weights.len() + 1, &edges)
    }

    /// Theta graph: two hub vertices (0 and 1) joined by three internally
    /// disjoint paths of `k1`, `k2` and `k12` edges. `weights` lists the
    /// edge weights in path order (first path, second path, shared path),
    /// so the edge index layout matches the three-set split used by the
    /// two-cycle stability analysis. At most one of the lengths may be 1,
    /// otherwise parallel edges would arise.
    pub fn theta(k1: usize, k2: usize, k12: usize, weights: &[f64]) -> Result<Self> {
        if k1 < 1 || k2 < 1 || k12 < 1 {
            return Err(Error::Spec("theta graph path lengths must be >= 1".into()));
        }
        if weights.len() != k1 + k2 + k12 {
            return Err(Error::Dimension(format!(
                "theta graph needs {} weights, got {}",
                k1 + k2 + k12,
                weights.len()
            )));
        }
        let mut edges = Vec::new();
        let mut next_vertex = 2;
        let mut widx = 0;
        for &k in &[k1, k2, k12] {
            let mut prev = 0;
            for step in 0..k {
                let to = if step + 1 == k {
                    1
                } else {
                    let v = next_vertex;
                    next_vertex += 1;
                    v
                };
                edges.push((prev, to, weights[widx]));
                widx += 1;
                prev = to;
            }
        }
        Self::new(next_vertex, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Diagonal of the edge-weight matrix, in edge order.
    pub fn weights(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    /// Neighbors of `v` as `(neighbor, edge index)`, ascending by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.weight < 0.0).count()
    }

    /// Cycle rank `C = |E| - |V| + components`; the dimension of the cycle
    /// space (nullity of the incidence matrix).
    pub fn cycle_rank(&self) -> usize {
        let (components, _) = self.connected_components(SignFilter::All);
        self.edges.len() + components - self.vertex_count
    }

    /// Component count and per-vertex labels of the subgraph keeping only
    /// edges that pass `filter`. Isolated vertices count as components.
    /// Labels are dense, assigned in order of first vertex.
    pub fn connected_components(&self, filter: SignFilter) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &self.adjacency[v] {
                    if filter.passes(self.edges[e].weight) && label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.connected_components(SignFilter::All).0 == 1
    }

    /// Signed incidence matrix: column `e` has `+1` at the tail and `-1`
    /// at the head of edge `e`.
    pub fn incidence(&self) -> IncidenceMatrix {
        let mut b = Array2::zeros((self.vertex_count, self.edges.len()));
        for (idx, e) in self.edges.iter().enumerate() {
            b[[e.tail, idx]] = 1;
            b[[e.head, idx]] = -1;
        }
        IncidenceMatrix { matrix: b }
    }

    /// BFS spanning tree rooted at vertex 0 with neighbors visited in
    /// ascending order, so the edge partition is reproducible.
    pub fn spanning_tree(&self) -> Result<SpanningTree> {
        if self.vertex_count == 0 {
            return Err(Error::NotConnected);
        }
        let mut parent = vec![None; self.vertex_count];
        let mut visited = vec![false; self.vertex_count];
        let mut in_tree = vec![false; self.edges.len()];
        visited[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &self.adjacency[v] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some((v, e));
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
        if visited.iter().any(|&v| !v) {
            return Err(Error::NotConnected);
        }
        let tree_edges: Vec<_> = (0..self.edges.len()).filter(|&e| in_tree[e]).collect();
        let non_tree_edges: Vec<_> = (0..self.edges.len()).filter(|&e| !in_tree[e]).collect();
        Ok(SpanningTree {
            tree_edges,
            non_tree_edges,
            parent,
        })
    }

    /// Fundamental cycle basis for `tree`: one column per non-tree edge,
    /// normalized so that column `j` has entry `+1` at the `j`-th non-tree
    /// edge, closed by the signed tree path. Every column lies in the
    /// nullspace of the incidence matrix, exactly in integer arithmetic.
    pub fn cycle_basis(&self, tree: &SpanningTree) -> CycleBasis {
        let m = self.edges.len();
        let c = tree.non_tree_edges.len();
        let mut vectors = Array2::zeros((m, c));
        for (col, &e) in tree.non_tree_edges.iter().enumerate() {
            let edge = self.edges[e];
            let path = parent_path_vector(&self.edges, &tree.parent, edge.head, edge.tail);
            for (row, &v) in path.iter().enumerate() {
                vectors[[row, col]] = v;
            }
            vectors[[e, col]] += 1;
        }
        CycleBasis {
            vectors,
            weights: self.weights(),
        }
    }

    /// Edges that lie on some cycle: the union of the supports of the
    /// fundamental cycles.
    pub fn cycle_set(&self) -> Result<Vec<usize>> {
        let tree = self.spanning_tree()?;
        let basis = self.cycle_basis(&tree);
        let mut on_cycle = vec![false; self.edges.len()];
        for ((row, _), &v) in basis.vectors.indexed_iter() {
            if v != 0 {
                on_cycle[row] = true;
            }
        }
        Ok((0..self.edges.len()).filter(|&e| on_cycle[e]).collect())
    }

    /// Edges contained in every spanning tree (the bridges); complement of
    /// the cycle set.
    pub fn tree_set(&self) -> Result<Vec<usize>> {
        let cycle_set: HashSet<_> = self.cycle_set()?.into_iter().collect();
        Ok((0..self.edges.len())
            .filter(|e| !cycle_set.contains(e))
            .collect())
    }
}

/// Signed incidence matrix of a graph, `|V| x |E|` with entries in
/// `{-1, 0, +1}`.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    pub matrix: Array2<i64>,
}

/// Edge partition induced by a rooted BFS spanning tree.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    /// Tree edge indices, ascending.
    pub tree_edges: Vec<usize>,
    /// Non-tree edge indices, ascending; one fundamental cycle each.
    pub non_tree_edges: Vec<usize>,
    /// parent[v] = (parent vertex, connecting edge index); `None` at the root.
    pub parent: Vec<Option<(usize, usize)>>,
}

/// Oriented fundamental-cycle vectors over the edge set, together with the
/// diagonal of the edge-weight matrix.
#[derive(Debug, Clone)]
pub struct CycleBasis {
    /// `|E| x C` integer matrix, one cycle per column.
    pub vectors: Array2<i64>,
    /// Edge weights in edge order (diagonal of the weight matrix).
    pub weights: Vec<f64>,
}

impl CycleBasis {
    pub fn cycle_count(&self) -> usize {
        self.vectors.ncols()
    }
}

/// Signed indicator of the walk `from -> to` through parent pointers: entry
/// `+1` where an edge is traversed tail to head, `-1` the other way. The
/// walks to the root from both endpoints cancel on their shared segment, so
/// the result is the simple path. Both endpoints must reach the same root.
pub(crate) fn parent_path_vector(
    edges: &[Edge],
    parent: &[Option<(usize, usize)>],
    from: usize,
    to: usize,
) -> Vec<i64> {
    let mut path = vec![0i64; edges.len()];
    let walk = |start: usize, sign: i64, path: &mut Vec<i64>| {
        let mut v = start;
        while let Some((p, e)) = parent[v] {
            // moving v -> p; +1 when that matches the stored tail -> head
            path[e] += if edges[e].tail == v { sign } else { -sign };
            v = p;
        }
    };
    walk(from, 1, &mut path);
    walk(to, -1, &mut path);
    path
}

#[derive(Deserialize)]
struct EdgeListFile {
    edges: Vec<(usize, usize, f64)>,
}

/// Loads a graph from edge-list text (`tail head weight` per line, `#`
/// comments) or from the JSON form `{"edges": [[u, v, w], ...]}`. Vertex
/// ids are compacted to `0..N-1` in order of first appearance.
pub fn load_graph(source: &str) -> Result<WeightedGraph> {
    let raw = if source.trim_start().starts_with('{') {
        let file: EdgeListFile =
            serde_json::from_str(source).map_err(|e| Error::Format {
                line: e.line(),
                reason: e.to_string(),
            })?;
        file.edges
    } else {
        parse_edge_list(source)?
    };

    let mut compact = HashMap::new();
    let mut next = 0;
    let mut edges = Vec::with_capacity(raw.len());
    for (u, v, w) in raw {
        let mut id = |raw_id: usize| {
            *compact.entry(raw_id).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        };
        let (cu, cv) = (id(u), id(v));
        edges.push((cu, cv, w));
    }
    WeightedGraph::new(next, &edges)
}

fn parse_edge_list(source: &str) -> Result<Vec<(usize, usize, f64)>> {
    let mut edges = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Format {
                line: lineno + 1,
                reason: format!("expected `tail head weight`, got {} fields", fields.len()),
            });
        }
        let parse_vertex = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Format {
                line: lineno + 1,
                reason: format!("invalid vertex id `{s}`"),
            })
        };
        let u = parse_vertex(fields[0])?;
        let v = parse_vertex(fields[1])?;
        let w = fields[2].parse::<f64>().map_err(|_| Error::Format {
            line: lineno + 1,
            reason: format!("invalid weight `{}`", fields[2]),
        })?;
        edges.push((u, v, w));
    }
    Ok(edges)
}
