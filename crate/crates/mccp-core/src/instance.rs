//! Instance file format and the random instance generator.
//!
//! Format: the first significant line is `<node_count> <edge_count>
//! <color_count>`; each following significant line is one edge
//! `<u> <v> <color>` with `0 <= u < v < node_count`. Lines starting with
//! `#` are comments; blank lines are ignored; any run of blanks separates
//! fields. [`write_instance`] emits the canonical form (single spaces,
//! edges sorted by `(u, v, color)`), and parsing a written graph gives the
//! graph back exactly.

use crate::color_set::ColorSet;
use crate::graph::{count_components, ColoredGraph, Edge, Violation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Why a piece of instance text was rejected. Line numbers are 1-based.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    Edge { line: usize, reason: String },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("color {color} appears on no edge")]
    UnusedColor { color: usize },
    #[error("graph is disconnected ({components} components with all edges present)")]
    Disconnected { components: usize },
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Parses instance text into a validated graph.
pub fn parse_instance(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(ParseError::Header {
            line: header_line,
            reason: format!("expected `<nodes> <edges> <colors>`, got {} fields", fields.len()),
        });
    }
    let parse_count = |what: &str, token: &str| {
        token.parse::<usize>().map_err(|_| ParseError::Header {
            line: header_line,
            reason: format!("{what} `{token}` is not a non-negative integer"),
        })
    };
    let node_count = parse_count("node count", fields[0])?;
    let edge_count = parse_count("edge count", fields[1])?;
    let color_count = parse_count("color count", fields[2])?;
    if node_count == 0 {
        return Err(ParseError::Header {
            line: header_line,
            reason: "node count must be positive".into(),
        });
    }
    if color_count == 0 {
        return Err(ParseError::Header {
            line: header_line,
            reason: "color count must be positive".into(),
        });
    }

    let mut edges = Vec::with_capacity(edge_count);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::Edge {
                line,
                reason: format!("expected `<u> <v> <color>`, got {} fields", fields.len()),
            });
        }
        let parse_field = |what: &str, token: &str| {
            token.parse::<usize>().map_err(|_| ParseError::Edge {
                line,
                reason: format!("{what} `{token}` is not a non-negative integer"),
            })
        };
        let u = parse_field("endpoint", fields[0])?;
        let v = parse_field("endpoint", fields[1])?;
        let color = parse_field("color", fields[2])?;
        if u == v {
            return Err(ParseError::Edge {
                line,
                reason: format!("self-loop on node {u}"),
            });
        }
        if u > v {
            return Err(ParseError::Edge {
                line,
                reason: format!("endpoints must satisfy u < v, got {u} {v}"),
            });
        }
        if v >= node_count {
            return Err(ParseError::Edge {
                line,
                reason: format!("node {v} outside the node range 0..{node_count}"),
            });
        }
        if color >= color_count {
            return Err(ParseError::Edge {
                line,
                reason: format!("color {color} outside the color range 0..{color_count}"),
            });
        }
        edges.push(Edge::new(u, v, color));
    }
    if edges.len() != edge_count {
        return Err(ParseError::EdgeCountMismatch {
            expected: edge_count,
            found: edges.len(),
        });
    }

    ColoredGraph::new(node_count, color_count, edges).map_err(|invalid| {
        // Range and self-loop errors were reported per line above, so only
        // whole-graph violations can remain.
        match invalid.violations.into_iter().next() {
            Some(Violation::UnusedColor { color }) => ParseError::UnusedColor { color },
            Some(Violation::Disconnected { components }) => ParseError::Disconnected { components },
            other => unreachable!("unexpected violation after line checks: {other:?}"),
        }
    })
}

/// Renders a graph in canonical instance format.
pub fn write_instance(graph: &ColoredGraph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        graph.node_count(),
        graph.edge_count(),
        graph.color_count()
    );
    for e in graph.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.color));
    }
    out
}

/// Parameters for [`generate_instance`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorParams {
    pub node_count: usize,
    pub color_count: usize,
    /// Target fraction of the `n(n-1)/2` node pairs carrying an edge, in (0, 1].
    pub density: f64,
    pub seed: u64,
}

/// Why generation was refused.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("node count must be at least 2")]
    NodeCountTooSmall,
    #[error("color count must be positive")]
    ColorCountZero,
    #[error("density must be in (0, 1], got {0}")]
    DensityOutOfRange(f64),
    #[error(
        "expected edge count {expected:.2} is below the {tree} spanning-tree edges; \
         raise density to at least {min_density:.4}"
    )]
    ExpectedEdgesBelowTree {
        expected: f64,
        tree: usize,
        min_density: f64,
    },
    #[error("{color_count} colors cannot all be used on {edge_count} edges")]
    MoreColorsThanEdges { color_count: usize, edge_count: usize },
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<(), GenerateError> {
        if self.node_count < 2 {
            return Err(GenerateError::NodeCountTooSmall);
        }
        if self.color_count == 0 {
            return Err(GenerateError::ColorCountZero);
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(GenerateError::DensityOutOfRange(self.density));
        }
        let pairs = (self.node_count * (self.node_count - 1) / 2) as f64;
        let expected = self.density * pairs;
        let tree = self.node_count - 1;
        if expected < tree as f64 {
            return Err(GenerateError::ExpectedEdgesBelowTree {
                expected,
                tree,
                min_density: tree as f64 / pairs,
            });
        }
        Ok(())
    }
}

/// Decodes a uniformly random labeled tree on `n >= 2` nodes from a random
/// sequence (the classic `n - 2` symbol encoding of labeled trees, drawn
/// uniformly, decodes to a uniformly random spanning tree of the complete
/// graph).
fn random_spanning_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr` scans for leaves in ascending order; `leaf` tracks the smallest
    // current leaf so decoding is deterministic.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in &seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Generates a connected random instance.
///
/// Construction: a uniformly random spanning tree guarantees connectivity;
/// every remaining node pair is added independently with the probability
/// that makes the expected total edge count equal `density * n(n-1)/2`;
/// colors are assigned uniformly; finally any unused color is reassigned
/// onto a uniformly chosen edge whose color still appears at least twice.
/// Deterministic for a given seed.
pub fn generate_instance(params: &GeneratorParams) -> Result<ColoredGraph, GenerateError> {
    params.validate()?;
    let n = params.node_count;
    let pairs = n * (n - 1) / 2;
    let tree_edge_count = n - 1;
    let expected = params.density * pairs as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let tree = random_spanning_tree(n, &mut rng);
    let mut is_tree_pair = vec![false; pairs];
    let pair_index = |u: usize, v: usize| {
        let (u, v) = (u.min(v), u.max(v));
        // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in ascending order.
        u * n - u * (u + 1) / 2 + (v - u - 1)
    };
    for &(u, v) in &tree {
        is_tree_pair[pair_index(u, v)] = true;
    }

    let mut pair_edges: Vec<(usize, usize)> = Vec::new();
    if pairs > tree_edge_count {
        let p = (expected - tree_edge_count as f64) / (pairs - tree_edge_count) as f64;
        for u in 0..n {
            for v in (u + 1)..n {
                if is_tree_pair[pair_index(u, v)] {
                    continue;
                }
                if rng.random::<f64>() < p {
                    pair_edges.push((u, v));
                }
            }
        }
    }

    let edge_count = tree.len() + pair_edges.len();
    if params.color_count > edge_count {
        return Err(GenerateError::MoreColorsThanEdges {
            color_count: params.color_count,
            edge_count,
        });
    }

    let endpoints = tree.into_iter().chain(pair_edges);
    let mut colors: Vec<usize> = Vec::with_capacity(edge_count);
    let mut usage = vec![0usize; params.color_count];
    let mut edges: Vec<Edge> = endpoints
        .map(|(u, v)| {
            let color = rng.random_range(0..params.color_count);
            colors.push(color);
            usage[color] += 1;
            Edge::new(u, v, color)
        })
        .collect();

    // Repair pass: reassign each missing color onto an edge whose color
    // still appears at least twice. Possible by pigeonhole since
    // edge_count >= color_count.
    for missing in 0..params.color_count {
        if usage[missing] > 0 {
            continue;
        }
        let donors: Vec<usize> = (0..edges.len())
            .filter(|&i| usage[edges[i].color] >= 2)
            .collect();
        let pick = donors[rng.random_range(0..donors.len())];
        usage[edges[pick].color] -= 1;
        usage[missing] += 1;
        edges[pick].color = missing;
    }

    let graph = ColoredGraph::new(n, params.color_count, edges)
        .expect("generated instance must be valid");
    debug_assert_eq!(count_components(&graph, &ColorSet::full(graph.color_count())), 1);
    Ok(graph)
}
