//! Variable neighborhood search for the minimum coloring cut problem.
//!
//! A solution is the set of colors *kept*; it is feasible when the kept
//! edges leave the graph disconnected, and better when it keeps more colors
//! (the discarded colors are the cut, so the reported value is
//! `color_count - kept`). The search alternates solution rebuilding,
//! size-k random perturbation (shake), a repair step, and maximizing local
//! search, with two flavors of constructive choice: deterministic greedy
//! (most components, lowest color id on ties) and probabilistic selection
//! weighted by `exp(Δ/T)` relative to the greedy champion.

use crate::color_set::ColorSet;
use crate::graph::{
    count_components, disconnecting_edges, extract_minimal_cut, ColoredGraph, Edge, Solution,
};
use crate::union_find::DisjointSets;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};
use thiserror::Error;

/// How constructive steps pick the next color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Always the candidate inducing the most components; ties go to the
    /// lowest color id.
    Greedy,
    /// Boltzmann selection among feasible candidates, weighted by
    /// `exp(Δ/T)` where Δ is the component-count gap to the best candidate.
    Probabilistic,
}

/// When to stop the outer loop. At least one criterion must be set; with
/// both set, whichever trips first wins.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StopCondition {
    pub time_limit: Option<Duration>,
    pub max_outer_iterations: Option<u64>,
}

impl StopCondition {
    pub fn time_limit(seconds: f64) -> Self {
        StopCondition {
            time_limit: Some(Duration::from_secs_f64(seconds)),
            max_outer_iterations: None,
        }
    }

    pub fn max_outer_iterations(iterations: u64) -> Self {
        StopCondition {
            time_limit: None,
            max_outer_iterations: Some(iterations),
        }
    }

    fn is_set(&self) -> bool {
        self.time_limit.is_some() || self.max_outer_iterations.is_some()
    }

    fn time_exhausted(&self, start: Instant) -> bool {
        self.time_limit.is_some_and(|limit| start.elapsed() >= limit)
    }

    fn met(&self, start: Instant, outer_iterations: u64) -> bool {
        self.time_exhausted(start)
            || self
                .max_outer_iterations
                .is_some_and(|cap| outer_iterations >= cap)
    }
}

/// Full configuration of one solver run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub mode: Mode,
    /// Temperature of the probabilistic selection; must be positive.
    pub temperature: f64,
    pub stop: StopCondition,
    /// Seed of the single pseudo-random stream driving the whole run.
    pub seed: u64,
}

impl SolverConfig {
    pub fn new(mode: Mode, stop: StopCondition) -> Self {
        SolverConfig {
            mode,
            temperature: 1.0,
            stop,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_temperature(mut self, temperature: f64) -> Self {
        self.temperature = temperature;
        self
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if self.temperature <= 0.0 || self.temperature.is_nan() {
            return Err(SolverError::NonPositiveTemperature(self.temperature));
        }
        if !self.stop.is_set() {
            return Err(SolverError::NoStopCondition);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),
    #[error("no stop condition set: give a time limit and/or an iteration cap")]
    NoStopCondition,
    #[error("instance must have at least 2 nodes")]
    TooFewNodes,
    #[error("input color set is infeasible: the induced subgraph is connected")]
    InfeasibleInput,
}

/// Everything a finished run reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    /// Number of colors in the cut: `color_count - kept_colors.len()`.
    pub value: usize,
    pub kept_colors: ColorSet,
    pub cut_colors: ColorSet,
    /// Every edge carrying a cut color, in canonical order.
    pub disconnecting: Vec<Edge>,
    /// Inclusion-minimal subset of `disconnecting` that still disconnects.
    pub minimal_cut: Vec<Edge>,
    pub elapsed: Duration,
    pub outer_iterations: u64,
    pub shakes: u64,
}

/// Outcome of a shake: the perturbed set plus how far it actually moved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShakeOutcome {
    pub colors: ColorSet,
    /// Achieved symmetric difference against the input; equals `k` unless
    /// both pools ran dry (only possible when `k > color_count`).
    pub achieved: usize,
    pub exhausted: bool,
}

/// Reusable state for one run: the union-find of the current color set plus
/// a scratch copy for candidate evaluation, so the hot selection loops do
/// not allocate.
struct SearchState<'g> {
    graph: &'g ColoredGraph,
    base: DisjointSets,
    scratch: DisjointSets,
    /// Candidate component counts for the probabilistic mode, parallel to
    /// the current pool.
    comps: Vec<usize>,
    weights: Vec<f64>,
}

impl<'g> SearchState<'g> {
    fn new(graph: &'g ColoredGraph) -> Self {
        SearchState {
            graph,
            base: DisjointSets::new(graph.node_count()),
            scratch: DisjointSets::new(graph.node_count()),
            comps: Vec::with_capacity(graph.color_count()),
            weights: Vec::with_capacity(graph.color_count()),
        }
    }

    /// Rebuilds `base` to the components induced by `colors`.
    fn load(&mut self, colors: &ColorSet) -> usize {
        self.base.reset();
        for color in colors.iter() {
            self.commit(color);
        }
        self.base.components()
    }

    /// Components induced by the current base plus one candidate color.
    fn eval(&mut self, color: usize) -> usize {
        self.scratch.copy_from(&self.base);
        for e in self.graph.edges_of_color(color) {
            self.scratch.union(e.u, e.v);
        }
        self.scratch.components()
    }

    /// Merges `color`'s edges into the base state.
    fn commit(&mut self, color: usize) {
        for e in self.graph.edges_of_color(color) {
            self.base.union(e.u, e.v);
        }
    }

    /// Index of the greedy choice in `pool`: maximum induced component
    /// count, lowest color id on ties (the pool is kept ascending).
    fn greedy_pick(&mut self, pool: &[usize]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, &color) in pool.iter().enumerate() {
            let comps = self.eval(color);
            if best.is_none_or(|(_, best_comps)| comps > best_comps) {
                best = Some((i, comps));
            }
        }
        best
    }

    /// Boltzmann pick among the feasible pool entries: weight `exp(Δ/T)`
    /// against the maximum component count over the *whole* pool, then
    /// renormalized over the feasible entries alone. One uniform draw per
    /// successful selection.
    fn boltzmann_pick(
        &mut self,
        pool: &[usize],
        temperature: f64,
        rng: &mut ChaCha8Rng,
    ) -> Option<(usize, usize)> {
        if pool.is_empty() {
            return None;
        }
        self.comps.clear();
        let mut champion = 1usize;
        for &color in pool {
            let comps = self.eval(color);
            self.comps.push(comps);
            champion = champion.max(comps);
        }
        if champion <= 1 {
            return None; // no feasible candidate
        }
        self.weights.clear();
        let mut total = 0.0;
        for &comps in &self.comps {
            let weight = if comps > 1 {
                let delta = comps as f64 - champion as f64;
                (delta / temperature).exp()
            } else {
                0.0
            };
            total += weight;
            self.weights.push(weight);
        }
        let target = rng.random::<f64>() * total;
        let mut cumulative = 0.0;
        let mut chosen = None;
        for (i, &weight) in self.weights.iter().enumerate() {
            if weight == 0.0 {
                continue;
            }
            cumulative += weight;
            chosen = Some(i);
            if cumulative > target {
                break;
            }
        }
        chosen.map(|i| (i, self.comps[i]))
    }

    /// Repeatedly adds colors from `pool` into `colors` while an addition
    /// keeps the graph disconnected, following `mode`. Assumes `base`
    /// matches `colors`. Returns the final component count.
    fn extend_maximal(
        &mut self,
        colors: &mut ColorSet,
        pool: &mut Vec<usize>,
        components: usize,
        mode: Mode,
        temperature: f64,
        rng: &mut ChaCha8Rng,
    ) -> usize {
        let mut components = components;
        loop {
            if pool.is_empty() {
                return components;
            }
            let picked = match mode {
                Mode::Greedy => match self.greedy_pick(pool) {
                    Some((i, comps)) if comps > 1 => Some((i, comps)),
                    _ => None,
                },
                Mode::Probabilistic => self.boltzmann_pick(pool, temperature, rng),
            };
            let Some((i, comps)) = picked else {
                return components;
            };
            let color = pool.remove(i);
            colors.insert(color);
            self.commit(color);
            components = comps;
        }
    }
}

/// Builds a maximal feasible starting solution from the empty color set,
/// adding colors by the configured rule until no addition keeps the graph
/// disconnected. Rejects instances with fewer than 2 nodes, which admit no
/// disconnected spanning subgraph.
pub fn generate_initial_solution(
    graph: &ColoredGraph,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Solution, SolverError> {
    if graph.node_count() < 2 {
        return Err(SolverError::TooFewNodes);
    }
    let mut state = SearchState::new(graph);
    Ok(initial_solution(&mut state, config, rng))
}

fn initial_solution(
    state: &mut SearchState<'_>,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> Solution {
    let graph = state.graph;
    let mut colors = ColorSet::empty(graph.color_count());
    let components = state.load(&colors);
    let mut pool: Vec<usize> = (0..graph.color_count()).collect();
    let components = state.extend_maximal(
        &mut colors,
        &mut pool,
        components,
        config.mode,
        config.temperature,
        rng,
    );
    Solution::from_parts(colors, components)
}

/// Rebuilds a fresh solution biased away from `best`: colors outside `best`
/// are offered first, and only once that pool is spent may `best`'s own
/// colors fill the set back up. Both phases follow the configured rule and
/// stop when no addition keeps the graph disconnected.
pub fn new_solution(
    graph: &ColoredGraph,
    best: &Solution,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> Solution {
    let mut state = SearchState::new(graph);
    rebuild_solution(&mut state, best, config, rng)
}

fn rebuild_solution(
    state: &mut SearchState<'_>,
    best: &Solution,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> Solution {
    debug_assert!(best.is_feasible(), "rebuilding requires a feasible incumbent");
    let graph = state.graph;
    let mut colors = ColorSet::empty(graph.color_count());
    let mut components = state.load(&colors);

    let mut outside: Vec<usize> = best.colors().complement().members();
    components = state.extend_maximal(
        &mut colors,
        &mut outside,
        components,
        config.mode,
        config.temperature,
        rng,
    );

    let mut inside: Vec<usize> = best
        .colors()
        .iter()
        .filter(|&c| !colors.contains(c))
        .collect();
    components = state.extend_maximal(
        &mut colors,
        &mut inside,
        components,
        config.mode,
        config.temperature,
        rng,
    );

    Solution::from_parts(colors, components)
}

/// Random walk to distance `k`: each step removes a color still shared with
/// the input set or adds one foreign to it, chosen by a fair coin with
/// fallback to the non-empty pool, so the symmetric difference grows by one
/// per step. Stops early only when both pools are empty (`k > width`).
pub fn shake(base: &ColorSet, k: usize, rng: &mut ChaCha8Rng) -> ShakeOutcome {
    let mut colors = base.clone();
    // Colors removable without leaving the walk's reach: still in both the
    // input and the current set. Additions come from colors in neither.
    let mut removal_pool: Vec<usize> = base.members();
    let mut addition_pool: Vec<usize> = base.complement().members();
    let mut achieved = 0;
    let mut exhausted = false;
    for _ in 0..k {
        if removal_pool.is_empty() && addition_pool.is_empty() {
            exhausted = true;
            break;
        }
        let coin: f64 = rng.random();
        let remove = if coin < 0.5 {
            !removal_pool.is_empty()
        } else {
            addition_pool.is_empty()
        };
        if remove {
            let color = removal_pool.remove(rng.random_range(0..removal_pool.len()));
            colors.remove(color);
        } else {
            let color = addition_pool.remove(rng.random_range(0..addition_pool.len()));
            colors.insert(color);
        }
        achieved += 1;
    }
    debug_assert_eq!(colors.symmetric_difference_len(base), achieved);
    ShakeOutcome {
        colors,
        achieved,
        exhausted,
    }
}

/// Restores feasibility by discarding uniformly random colors until the
/// kept edges no longer span a single component. Feasible input is returned
/// unchanged; the empty set (at least 2 nodes) is always feasible, so this
/// terminates.
pub fn fix(graph: &ColoredGraph, mut colors: ColorSet, rng: &mut ChaCha8Rng) -> ColorSet {
    while count_components(graph, &colors) == 1 {
        let members = colors.members();
        colors.remove(members[rng.random_range(0..members.len())]);
    }
    colors
}

/// Greedily (or probabilistically) grows a feasible color set until no
/// further color can be added without reconnecting the graph. The result is
/// a feasible, set-inclusion-maximal superset of the input; infeasible
/// input is rejected.
pub fn local_search(
    graph: &ColoredGraph,
    colors: &ColorSet,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
) -> Result<ColorSet, SolverError> {
    let mut state = SearchState::new(graph);
    let mut colors = colors.clone();
    let components = state.load(&colors);
    if components == 1 {
        return Err(SolverError::InfeasibleInput);
    }
    let mut pool: Vec<usize> = colors.complement().members();
    state.extend_maximal(
        &mut colors,
        &mut pool,
        components,
        config.mode,
        config.temperature,
        rng,
    );
    Ok(colors)
}

/// Runs the full search and reports the best coloring cut found.
///
/// Loop shape: build a starting solution; repeatedly rebuild against the
/// incumbent (re-rebuilding while that alone improves it), then sweep
/// neighborhood sizes `k = 1, 2, ...` strictly below `color_count -
/// |incumbent|`, each sweep step shaking the working solution to distance
/// k, repairing connectivity if needed, and running local search, restarting
/// the sweep at `k = 1` whenever the working solution strictly improves.
/// The stop condition is consulted after every outer iteration, and a wall-
/// clock limit is additionally honored inside the sweep.
pub fn solve(graph: &ColoredGraph, config: &SolverConfig) -> Result<RunReport, SolverError> {
    config.validate()?;
    if graph.node_count() < 2 {
        return Err(SolverError::TooFewNodes);
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut state = SearchState::new(graph);

    let mut best = initial_solution(&mut state, config, &mut rng);
    let mut outer_iterations = 0u64;
    let mut shakes = 0u64;

    loop {
        let mut current = rebuild_solution(&mut state, &best, config, &mut rng);
        while current.size() > best.size() {
            best = current.clone();
            if config.stop.time_exhausted(start) {
                break;
            }
            current = rebuild_solution(&mut state, &best, config, &mut rng);
        }

        let max_neighborhood = graph.color_count() - best.size();
        let mut k = 1;
        while k < max_neighborhood {
            if config.stop.time_exhausted(start) {
                break;
            }
            let shaken = shake(current.colors(), k, &mut rng);
            shakes += 1;
            let mut candidate = shaken.colors;
            let mut components = state.load(&candidate);
            if components == 1 {
                candidate = fix(graph, candidate, &mut rng);
                components = state.load(&candidate);
            }
            let mut pool: Vec<usize> = candidate.complement().members();
            let components = state.extend_maximal(
                &mut candidate,
                &mut pool,
                components,
                config.mode,
                config.temperature,
                &mut rng,
            );
            if candidate.len() > current.size() {
                current = Solution::from_parts(candidate, components);
                k = 1;
            } else {
                k += 1;
            }
        }

        if current.size() > best.size() {
            best = current;
        }
        outer_iterations += 1;
        if config.stop.met(start, outer_iterations) {
            break;
        }
    }

    let kept_colors = best.colors().clone();
    let cut_colors = kept_colors.complement();
    let disconnecting =
        disconnecting_edges(graph, &kept_colors).expect("incumbent solution must be feasible");
    let minimal_cut =
        extract_minimal_cut(graph, &disconnecting).expect("disconnecting set must disconnect");
    Ok(RunReport {
        value: graph.color_count() - best.size(),
        kept_colors,
        cut_colors,
        disconnecting,
        minimal_cut,
        elapsed: start.elapsed(),
        outer_iterations,
        shakes,
    })
}

/// Boltzmann selection over an explicit candidate list: evaluates
/// `count_components(base ∪ {c})` for every candidate, weights the feasible
/// ones (component count at least 2) by `exp(Δ/T)` relative to the best
/// candidate, and draws one. Returns `None` when no candidate is feasible.
pub fn boltzmann_select(
    graph: &ColoredGraph,
    base: &ColorSet,
    candidates: &[usize],
    temperature: f64,
    rng: &mut ChaCha8Rng,
) -> Option<usize> {
    let mut state = SearchState::new(graph);
    state.load(base);
    let pool: Vec<usize> = candidates.to_vec();
    state
        .boltzmann_pick(&pool, temperature, rng)
        .map(|(i, _)| pool[i])
}
