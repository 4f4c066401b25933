//! Python bindings: the graph type, the two-mode solver, the exact
//! references, and the instance generator, exported as the `mccp_py`
//! module. Color sets cross the boundary as sorted lists of ids and edges
//! as `(u, v, color)` tuples.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::time::Duration;

use mccp_core as core;
use mccp_core::{ColorSet, Edge, Mode, SolverConfig, StopCondition};

/// Checks ids and packs them into a bit set of the graph's color width.
fn to_color_set(width: usize, colors: &[usize]) -> PyResult<ColorSet> {
    for &color in colors {
        if color >= width {
            return Err(PyValueError::new_err(format!(
                "color {color} out of range: this graph has {width} colors"
            )));
        }
    }
    Ok(ColorSet::from_members(width, colors.iter().copied()))
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    match mode {
        "greedy" => Ok(Mode::Greedy),
        "prob" | "probabilistic" => Ok(Mode::Probabilistic),
        other => Err(PyValueError::new_err(format!(
            "unknown mode {other:?}: use \"greedy\" or \"prob\""
        ))),
    }
}

fn edge_tuples(edges: &[Edge]) -> Vec<(usize, usize, usize)> {
    edges.iter().map(|e| (e.u, e.v, e.color)).collect()
}

/// A connected graph whose edges each carry one color.
#[pyclass(name = "ColoredGraph", eq, frozen)]
#[derive(PartialEq)]
struct PyGraph {
    inner: core::ColoredGraph,
}

#[pymethods]
impl PyGraph {
    /// Build a graph from `(u, v, color)` edge tuples; raises ValueError
    /// listing every rule the input breaks.
    #[new]
    fn new(
        node_count: usize,
        color_count: usize,
        edges: Vec<(usize, usize, usize)>,
    ) -> PyResult<Self> {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v, color)| Edge::new(u, v, color))
            .collect();
        core::ColoredGraph::new(node_count, color_count, edges)
            .map(|inner| PyGraph { inner })
            .map_err(|err| PyValueError::new_err(err.to_string()))
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn color_count(&self) -> usize {
        self.inner.color_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// All edges as `(u, v, color)` tuples in canonical order.
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        edge_tuples(self.inner.edges())
    }

    /// Observed density `2m / n(n-1)`.
    fn density(&self) -> f64 {
        self.inner.density()
    }

    /// Number of connected components of the subgraph spanned by `colors`.
    fn count_components(&self, colors: Vec<usize>) -> PyResult<usize> {
        let colors = to_color_set(self.inner.color_count(), &colors)?;
        Ok(core::count_components(&self.inner, &colors))
    }

    /// Whether keeping exactly `colors` leaves the graph disconnected.
    fn is_feasible(&self, colors: Vec<usize>) -> PyResult<bool> {
        let colors = to_color_set(self.inner.color_count(), &colors)?;
        Ok(core::is_feasible(&self.inner, &colors))
    }

    /// Every edge NOT colored by `kept`; removing them disconnects the
    /// graph. Raises ValueError when `kept` is infeasible.
    fn disconnecting_edges(&self, kept: Vec<usize>) -> PyResult<Vec<(usize, usize, usize)>> {
        let kept = to_color_set(self.inner.color_count(), &kept)?;
        core::disconnecting_edges(&self.inner, &kept)
            .map(|edges| edge_tuples(&edges))
            .map_err(|err| PyValueError::new_err(err.to_string()))
    }

    /// Inclusion-minimal subset of `disconnecting_edges(kept)` that still
    /// disconnects the graph.
    fn minimal_cut(&self, kept: Vec<usize>) -> PyResult<Vec<(usize, usize, usize)>> {
        let kept = to_color_set(self.inner.color_count(), &kept)?;
        let disconnecting = core::disconnecting_edges(&self.inner, &kept)
            .map_err(|err| PyValueError::new_err(err.to_string()))?;
        core::extract_minimal_cut(&self.inner, &disconnecting)
            .map(|edges| edge_tuples(&edges))
            .map_err(|err| PyValueError::new_err(err.to_string()))
    }

    /// Canonical instance-file text; `parse_instance` inverts it exactly.
    fn write(&self) -> String {
        core::write_instance(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "ColoredGraph(nodes={}, edges={}, colors={})",
            self.inner.node_count(),
            self.inner.edge_count(),
            self.inner.color_count()
        )
    }
}

/// Result of one solver run.
#[pyclass(name = "RunReport", frozen)]
struct PyRunReport {
    /// Number of colors removed: `color_count - len(kept_colors)`.
    #[pyo3(get)]
    value: usize,
    #[pyo3(get)]
    kept_colors: Vec<usize>,
    #[pyo3(get)]
    cut_colors: Vec<usize>,
    #[pyo3(get)]
    disconnecting: Vec<(usize, usize, usize)>,
    #[pyo3(get)]
    minimal_cut: Vec<(usize, usize, usize)>,
    #[pyo3(get)]
    elapsed_s: f64,
    #[pyo3(get)]
    outer_iterations: u64,
    #[pyo3(get)]
    shakes: u64,
}

#[pymethods]
impl PyRunReport {
    fn __repr__(&self) -> String {
        format!(
            "RunReport(value={}, cut_colors={:?}, outer_iterations={}, shakes={})",
            self.value, self.cut_colors, self.outer_iterations, self.shakes
        )
    }
}

/// Result of the exact subset-enumeration search.
#[pyclass(name = "ExactResult", frozen)]
struct PyExactResult {
    /// Minimum number of colors whose removal disconnects the graph.
    #[pyo3(get)]
    value: usize,
    /// One optimal removal set.
    #[pyo3(get)]
    witness: Vec<usize>,
    /// Color subsets examined, including the winner.
    #[pyo3(get)]
    explored: u64,
}

#[pymethods]
impl PyExactResult {
    fn __repr__(&self) -> String {
        format!(
            "ExactResult(value={}, witness={:?}, explored={})",
            self.value, self.witness, self.explored
        )
    }
}

/// Parse instance-file text into a graph; errors carry line numbers.
#[pyfunction]
fn parse_instance(text: &str) -> PyResult<PyGraph> {
    core::parse_instance(text)
        .map(|inner| PyGraph { inner })
        .map_err(|err| PyValueError::new_err(err.to_string()))
}

/// Generate a random connected instance: uniform spanning tree plus
/// Bernoulli extra edges tuned so the expected edge count is
/// `density * node_count * (node_count - 1) / 2`, colored uniformly with
/// every color used. Deterministic per seed.
#[pyfunction]
#[pyo3(signature = (node_count, color_count, density, seed = 0))]
fn generate_instance(
    node_count: usize,
    color_count: usize,
    density: f64,
    seed: u64,
) -> PyResult<PyGraph> {
    let params = core::GeneratorParams {
        node_count,
        color_count,
        density,
        seed,
    };
    core::generate_instance(&params)
        .map(|inner| PyGraph { inner })
        .map_err(|err| PyValueError::new_err(err.to_string()))
}

/// Run the search for a disconnecting edge set using few colors.
///
/// `mode` is "greedy" or "prob"; set `max_iters`, `time_limit` (seconds),
/// or both — whichever trips first stops the run.
#[pyfunction]
#[pyo3(signature = (graph, mode = "greedy", seed = 0, max_iters = None, time_limit = None, temperature = 1.0))]
fn solve(
    graph: &PyGraph,
    mode: &str,
    seed: u64,
    max_iters: Option<u64>,
    time_limit: Option<f64>,
    temperature: f64,
) -> PyResult<PyRunReport> {
    let mode = parse_mode(mode)?;
    if let Some(seconds) = time_limit {
        if seconds <= 0.0 || seconds.is_nan() {
            return Err(PyValueError::new_err(format!(
                "time_limit must be positive, got {seconds}"
            )));
        }
    }
    if max_iters.is_none() && time_limit.is_none() {
        return Err(PyValueError::new_err(
            "set max_iters and/or time_limit to bound the run",
        ));
    }
    let stop = StopCondition {
        time_limit: time_limit.map(Duration::from_secs_f64),
        max_outer_iterations: max_iters,
    };
    let config = SolverConfig::new(mode, stop)
        .with_seed(seed)
        .with_temperature(temperature);
    let report =
        core::solve(&graph.inner, &config).map_err(|err| PyValueError::new_err(err.to_string()))?;
    Ok(PyRunReport {
        value: report.value,
        kept_colors: report.kept_colors.members(),
        cut_colors: report.cut_colors.members(),
        disconnecting: edge_tuples(&report.disconnecting),
        minimal_cut: edge_tuples(&report.minimal_cut),
        elapsed_s: report.elapsed.as_secs_f64(),
        outer_iterations: report.outer_iterations,
        shakes: report.shakes,
    })
}

/// Exact optimum by enumerating color subsets in increasing size
/// (exponential in `color_count`; refuses more than `max_colors`).
#[pyfunction]
#[pyo3(signature = (graph, max_colors = 20))]
fn brute_force_optimum(graph: &PyGraph, max_colors: usize) -> PyResult<PyExactResult> {
    core::brute_force_optimum(&graph.inner, max_colors)
        .map(|result| PyExactResult {
            value: result.value,
            witness: result.witness.members(),
            explored: result.explored,
        })
        .map_err(|err| PyValueError::new_err(err.to_string()))
}

/// Size of a global minimum edge cut, counting parallel edges separately.
#[pyfunction]
fn global_min_cut(graph: &PyGraph) -> usize {
    core::global_min_cut(&graph.inner)
}

#[pymodule]
fn mccp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyRunReport>()?;
    m.add_class::<PyExactResult>()?;
    m.add_function(wrap_pyfunction!(parse_instance, m)?)?;
    m.add_function(wrap_pyfunction!(generate_instance, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_optimum, m)?)?;
    m.add_function(wrap_pyfunction!(global_min_cut, m)?)?;
    Ok(())
}
