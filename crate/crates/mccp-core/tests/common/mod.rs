//! Oracles and fixtures shared by the integration tests. These are written
//! against plain adjacency structures, independent of the library's
//! union-find, so the two sides can check each other.

use mccp_core::{generate_instance, ColorSet, ColoredGraph, GeneratorParams};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Connected-component count by breadth-first search.
pub fn bfs_component_count(node_count: usize, edges: &[(usize, usize)]) -> usize {
    let mut adjacency = vec![Vec::new(); node_count];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut seen = vec![false; node_count];
    let mut components = 0;
    let mut queue = VecDeque::new();
    for start in 0..node_count {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(node) = queue.pop_front() {
            for &next in &adjacency[node] {
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    components
}

/// Minimum edge cut by enumerating every proper node bipartition (node 0
/// pinned to one side), counting crossing edges. Exponential; keep
/// `node_count` small.
pub fn min_cut_by_bipartitions(node_count: usize, edges: &[(usize, usize)]) -> usize {
    assert!((2..=20).contains(&node_count));
    let mut best = usize::MAX;
    for mask in 1u32..(1 << (node_count - 1)) {
        let side = |node: usize| node != 0 && mask >> (node - 1) & 1 == 1;
        let crossing = edges.iter().filter(|&&(u, v)| side(u) != side(v)).count();
        best = best.min(crossing);
    }
    best
}

/// Edge endpoints of the spanning subgraph induced by `colors`.
pub fn induced_endpoints(graph: &ColoredGraph, colors: &ColorSet) -> Vec<(usize, usize)> {
    graph
        .edges()
        .iter()
        .filter(|e| colors.contains(e.color))
        .map(|e| (e.u, e.v))
        .collect()
}

/// A valid random instance with at most `max_nodes` nodes, resampling
/// parameters until the generator accepts them.
pub fn random_instance(rng: &mut ChaCha8Rng, max_nodes: usize) -> ColoredGraph {
    loop {
        let node_count = rng.random_range(3..=max_nodes);
        let pairs = (node_count * (node_count - 1) / 2) as f64;
        let min_density = (node_count - 1) as f64 / pairs;
        let density = min_density + rng.random::<f64>() * (1.0 - min_density);
        let color_count = rng.random_range(1..=node_count);
        let params = GeneratorParams {
            node_count,
            color_count,
            density,
            seed: rng.random(),
        };
        if let Ok(graph) = generate_instance(&params) {
            return graph;
        }
    }
}

/// Random subset of the graph's colors, each kept with probability 1/2.
pub fn random_color_set(rng: &mut ChaCha8Rng, graph: &ColoredGraph) -> ColorSet {
    ColorSet::from_members(
        graph.color_count(),
        (0..graph.color_count()).filter(|_| rng.random::<bool>()),
    )
}
