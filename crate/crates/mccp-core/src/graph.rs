//! Edge-colored graphs and the cut-side primitives of the minimum coloring
//! cut problem: given a connected graph whose edges carry colors, a set of
//! kept colors is *feasible* when the spanning subgraph of the kept-colored
//! edges is disconnected — the discarded colors then form a coloring cut.

use crate::color_set::ColorSet;
use crate::union_find::DisjointSets;
use thiserror::Error;

/// An undirected colored edge. Endpoints are stored with `u <= v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

impl Edge {
    /// Creates an edge, normalizing the endpoint order.
    pub fn new(u: usize, v: usize, color: usize) -> Self {
        Edge {
            u: u.min(v),
            v: u.max(v),
            color,
        }
    }
}

/// A single way an instance fails the well-formedness rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `node_count` is zero.
    NoNodes,
    /// `color_count` is zero.
    NoColors,
    /// An edge joins a node to itself.
    SelfLoop { edge: usize, node: usize },
    /// An edge endpoint is `>= node_count`.
    NodeOutOfRange { edge: usize, node: usize },
    /// An edge color is `>= color_count`.
    ColorOutOfRange { edge: usize, color: usize },
    /// A color id in `0..color_count` appears on no edge.
    UnusedColor { color: usize },
    /// The graph with every edge present is not connected.
    Disconnected { components: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NoNodes => write!(f, "node count must be positive"),
            Violation::NoColors => write!(f, "color count must be positive"),
            Violation::SelfLoop { edge, node } => {
                write!(f, "edge {edge} is a self-loop on node {node}")
            }
            Violation::NodeOutOfRange { edge, node } => {
                write!(f, "edge {edge} references node {node} outside the node range")
            }
            Violation::ColorOutOfRange { edge, color } => {
                write!(f, "edge {edge} uses color {color} outside the color range")
            }
            Violation::UnusedColor { color } => {
                write!(f, "color {color} appears on no edge")
            }
            Violation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components with all edges present)")
            }
        }
    }
}

/// Construction failure: the offered instance breaks at least one rule.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("invalid instance: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidInstance {
    pub violations: Vec<Violation>,
}

/// Checks the instance rules and returns every violation found.
///
/// Rules: positive node and color counts; endpoints distinct and in range;
/// colors in range; every color used by at least one edge; the graph with all
/// edges present connected. The connectivity check is skipped when endpoints
/// are out of range (it would be meaningless).
pub fn validate(node_count: usize, color_count: usize, edges: &[Edge]) -> Vec<Violation> {
    let mut violations = Vec::new();
    if node_count == 0 {
        violations.push(Violation::NoNodes);
    }
    if color_count == 0 {
        violations.push(Violation::NoColors);
    }
    let mut endpoints_ok = node_count > 0;
    let mut used = vec![false; color_count];
    for (i, e) in edges.iter().enumerate() {
        if e.u == e.v {
            violations.push(Violation::SelfLoop { edge: i, node: e.u });
        }
        for node in [e.u, e.v] {
            if node >= node_count {
                violations.push(Violation::NodeOutOfRange { edge: i, node });
                endpoints_ok = false;
            }
        }
        if e.color >= color_count {
            violations.push(Violation::ColorOutOfRange { edge: i, color: e.color });
        } else {
            used[e.color] = true;
        }
    }
    for (color, &is_used) in used.iter().enumerate() {
        if !is_used {
            violations.push(Violation::UnusedColor { color });
        }
    }
    if endpoints_ok && node_count > 0 {
        let mut sets = DisjointSets::new(node_count);
        for e in edges {
            sets.union(e.u, e.v);
        }
        if sets.components() > 1 {
            violations.push(Violation::Disconnected {
                components: sets.components(),
            });
        }
    }
    violations
}

/// A connected, edge-colored undirected graph.
///
/// Instances are validated at construction, so holding a `ColoredGraph`
/// guarantees: `node_count >= 2`, `color_count >= 1`, every color used,
/// no self-loops, and connectivity with all edges present. Parallel edges
/// are allowed. Edges are stored sorted by `(u, v, color)`.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    node_count: usize,
    color_count: usize,
    edges: Vec<Edge>,
    /// Edge indices grouped by color, for cheap "add one color" updates.
    edges_by_color: Vec<Vec<u32>>,
}

impl ColoredGraph {
    /// Builds a graph after checking every instance rule.
    pub fn new(
        node_count: usize,
        color_count: usize,
        edges: Vec<Edge>,
    ) -> Result<Self, InvalidInstance> {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge::new(e.u, e.v, e.color))
            .collect();
        edges.sort_unstable();
        let violations = validate(node_count, color_count, &edges);
        if !violations.is_empty() {
            return Err(InvalidInstance { violations });
        }
        let mut edges_by_color = vec![Vec::new(); color_count];
        for (i, e) in edges.iter().enumerate() {
            edges_by_color[e.color].push(i as u32);
        }
        Ok(ColoredGraph {
            node_count,
            color_count,
            edges,
            edges_by_color,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical `(u, v, color)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edges carrying `color`.
    pub fn edges_of_color(&self, color: usize) -> impl Iterator<Item = Edge> + '_ {
        self.edges_by_color[color].iter().map(|&i| self.edges[i as usize])
    }

    /// Fraction of the `n(n-1)/2` possible node pairs that carry an edge,
    /// counting parallel edges individually.
    pub fn density(&self) -> f64 {
        let pairs = self.node_count * (self.node_count - 1) / 2;
        self.edges.len() as f64 / pairs as f64
    }
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.node_count == other.node_count
            && self.color_count == other.color_count
            && self.edges == other.edges
    }
}

impl Eq for ColoredGraph {}

/// Number of connected components of the spanning subgraph induced by the
/// edges whose color is in `colors`. Every node participates, so the result
/// is in `1..=node_count`; the empty set yields `node_count`.
pub fn count_components(graph: &ColoredGraph, colors: &ColorSet) -> usize {
    assert_eq!(
        colors.width(),
        graph.color_count(),
        "color set width does not match the graph's color count"
    );
    let mut sets = DisjointSets::new(graph.node_count());
    for color in colors.iter() {
        for e in graph.edges_of_color(color) {
            sets.union(e.u, e.v);
        }
    }
    sets.components()
}

/// True when keeping exactly `colors` leaves the graph disconnected, i.e.
/// the discarded colors form a coloring cut.
pub fn is_feasible(graph: &ColoredGraph, colors: &ColorSet) -> bool {
    count_components(graph, colors) > 1
}

/// A set of kept colors together with the component count it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    colors: ColorSet,
    components: usize,
}

impl Solution {
    /// Evaluates `colors` against `graph` and caches the component count.
    pub fn evaluate(graph: &ColoredGraph, colors: ColorSet) -> Self {
        let components = count_components(graph, &colors);
        Solution { colors, components }
    }

    pub(crate) fn from_parts(colors: ColorSet, components: usize) -> Self {
        Solution { colors, components }
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Number of kept colors.
    pub fn size(&self) -> usize {
        self.colors.len()
    }

    pub fn is_feasible(&self) -> bool {
        self.components > 1
    }

    /// `color_count - size`: the number of colors in the induced cut.
    pub fn value(&self) -> usize {
        self.colors.width() - self.colors.len()
    }
}

/// Errors from the cut-extraction helpers.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("kept colors are infeasible: the induced subgraph is connected")]
    InfeasibleColors,
    #[error("edge ({u}, {v}, {color}) is not in the graph")]
    EdgeNotInGraph { u: usize, v: usize, color: usize },
    #[error("removing the given edges leaves the graph connected")]
    NotDisconnecting,
}

/// All edges whose color is *not* in `kept`, in canonical order. Removing
/// them disconnects the graph; errors if `kept` is infeasible.
pub fn disconnecting_edges(graph: &ColoredGraph, kept: &ColorSet) -> Result<Vec<Edge>, CutError> {
    if !is_feasible(graph, kept) {
        return Err(CutError::InfeasibleColors);
    }
    Ok(graph
        .edges()
        .iter()
        .copied()
        .filter(|e| !kept.contains(e.color))
        .collect())
}

/// Refines a disconnecting edge set to an inclusion-minimal one.
///
/// Walks the candidate edges in ascending `(u, v, color)` order and re-adds
/// each one whose return keeps the graph disconnected; the edges that cannot
/// be returned form the result. Every edge of the result is therefore
/// necessary: putting any single one back reconnects the graph.
pub fn extract_minimal_cut(graph: &ColoredGraph, disconnecting: &[Edge]) -> Result<Vec<Edge>, CutError> {
    let mut removed: Vec<Edge> = disconnecting
        .iter()
        .map(|e| Edge::new(e.u, e.v, e.color))
        .collect();
    removed.sort_unstable();
    // Multiset check: every removed edge must exist in the graph.
    let mut graph_edges = graph.edges().iter();
    for e in &removed {
        if !graph_edges.any(|g| g == e) {
            return Err(CutError::EdgeNotInGraph {
                u: e.u,
                v: e.v,
                color: e.color,
            });
        }
    }

    // Union the kept edges (multiset difference: graph edges minus `removed`).
    let mut sets = DisjointSets::new(graph.node_count());
    let mut cursor = 0;
    for e in graph.edges() {
        if cursor < removed.len() && removed[cursor] == *e {
            cursor += 1;
        } else {
            sets.union(e.u, e.v);
        }
    }
    if sets.components() == 1 {
        return Err(CutError::NotDisconnecting);
    }

    // Re-add whatever can come back without reconnecting the graph.
    let mut cut = Vec::new();
    for e in removed {
        let merges = sets.find(e.u) != sets.find(e.v);
        if merges && sets.components() == 2 {
            cut.push(e);
        } else {
            sets.union(e.u, e.v);
        }
    }
    Ok(cut)
}
