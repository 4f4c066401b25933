//! Exact references for small instances: optimal coloring cuts by subset
//! enumeration, and the global minimum edge cut by weighted contraction.

use crate::color_set::ColorSet;
use crate::graph::ColoredGraph;
use crate::union_find::DisjointSets;
use thiserror::Error;

/// An exact optimum with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// Minimum number of colors whose removal disconnects the graph.
    pub value: usize,
    /// A removal set achieving `value` (the first one found in enumeration
    /// order: ascending cardinality, then ascending bit pattern).
    pub witness: ColorSet,
    /// Number of color subsets examined, including the winner.
    pub explored: u64,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error(
        "instance has {color_count} colors; enumeration is capped at {limit} \
         (2^{limit} subsets) — raise max_colors only for sizes you can afford"
    )]
    TooManyColors { color_count: usize, limit: usize },
}

/// Enumeration cannot exceed the mask width regardless of the caller's cap.
const HARD_COLOR_LIMIT: usize = 62;

/// Finds the minimum coloring cut exactly by enumerating removal sets in
/// ascending cardinality (ties: ascending bit pattern) and returning the
/// first that disconnects the graph. Refuses instances with more than
/// `max_colors` colors; `2^20` subsets is the intended desk scale.
pub fn brute_force_optimum(
    graph: &ColoredGraph,
    max_colors: usize,
) -> Result<ExactResult, ExactError> {
    let c = graph.color_count();
    let limit = max_colors.min(HARD_COLOR_LIMIT);
    if c > limit {
        return Err(ExactError::TooManyColors { color_count: c, limit });
    }

    let mut sets = DisjointSets::new(graph.node_count());
    let mut disconnects = |removed: u64| {
        sets.reset();
        for e in graph.edges() {
            if removed >> e.color & 1 == 0 {
                sets.union(e.u, e.v);
            }
        }
        sets.components() > 1
    };

    let full = (1u64 << c) - 1;
    let mut explored = 0u64;
    for k in 1..=c {
        // Masks of popcount k in ascending numeric order.
        let mut mask = (1u64 << k) - 1;
        loop {
            explored += 1;
            if disconnects(mask) {
                let witness =
                    ColorSet::from_members(c, (0..c).filter(|&i| mask >> i & 1 == 1));
                return Ok(ExactResult {
                    value: k,
                    witness,
                    explored,
                });
            }
            // Next same-popcount mask (Gosper); stop past the top for this k.
            let low = mask & mask.wrapping_neg();
            let carry = mask + low;
            mask = (((mask ^ carry) >> 2) / low) | carry;
            if mask > full {
                break;
            }
        }
    }
    // Removing every color always disconnects a graph with >= 2 nodes, so
    // the k == c round above must have returned.
    unreachable!("no disconnecting color set found");
}

/// Weight of a global minimum edge cut, treating every edge with weight 1
/// (parallel edges accumulate). Deterministic: ties in the maximum-adjacency
/// sweep go to the lowest node index.
pub fn global_min_cut(graph: &ColoredGraph) -> usize {
    let n = graph.node_count();
    let mut weight = vec![vec![0u64; n]; n];
    for e in graph.edges() {
        weight[e.u][e.v] += 1;
        weight[e.v][e.u] += 1;
    }

    let mut active: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    while active.len() > 1 {
        // Maximum-adjacency ordering over the surviving supernodes.
        let mut in_order = vec![false; active.len()];
        let mut attach: Vec<u64> = active.iter().map(|&v| weight[active[0]][v]).collect();
        in_order[0] = true;
        let mut last = 0;
        let mut second_last = 0;
        for _ in 1..active.len() {
            let mut pick = usize::MAX;
            for i in 0..active.len() {
                if !in_order[i] && (pick == usize::MAX || attach[i] > attach[pick]) {
                    pick = i;
                }
            }
            in_order[pick] = true;
            second_last = last;
            last = pick;
            for i in 0..active.len() {
                if !in_order[i] {
                    attach[i] += weight[active[pick]][active[i]];
                }
            }
        }

        // Cut of the phase: the last-added supernode against the rest.
        best = best.min(attach[last]);

        // Contract the last two supernodes (s absorbs t).
        let s = active[second_last];
        let t = active[last];
        let t_row = weight[t].clone();
        for (i, &wt) in t_row.iter().enumerate() {
            weight[s][i] += wt;
            weight[i][s] = weight[s][i];
        }
        weight[s][s] = 0;
        active.remove(last);
    }
    best as usize
}
