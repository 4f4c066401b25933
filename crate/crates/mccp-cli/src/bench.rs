//! Dataset benchmarking: run one solver mode over a list of instances,
//! aggregate averages, and emit a stable CSV report.

use mccp_core::{solve, ColoredGraph, Mode, SolverConfig, StopCondition};
use std::io::{self, Write};
use std::time::Duration;

/// Column header of every CSV report.
pub const CSV_HEADER: &str = "nodes,colors,density,instance,mode,seed,value,elapsed_s";

/// Wall-clock budget in seconds for an instance size: 1, 20, 30, 80, 200
/// and 2800 seconds at 50, 100, 200, 400, 500 and 1000 nodes respectively,
/// the nearest listed size below for anything in between, and 1 second for
/// fewer than 50 nodes.
pub fn default_time_limit(node_count: usize) -> f64 {
    const TABLE: [(usize, f64); 6] = [
        (50, 1.0),
        (100, 20.0),
        (200, 30.0),
        (400, 80.0),
        (500, 200.0),
        (1000, 2800.0),
    ];
    TABLE
        .iter()
        .rev()
        .find(|&&(size, _)| node_count >= size)
        .map_or(1.0, |&(_, seconds)| seconds)
}

/// Flag-style token naming a mode in reports and CSV rows.
pub fn mode_token(mode: Mode) -> &'static str {
    match mode {
        Mode::Greedy => "greedy",
        Mode::Probabilistic => "prob",
    }
}

/// One finished solver run inside a dataset.
#[derive(Clone, Debug)]
pub struct InstanceRun {
    /// Instance identifier: file stem or list index.
    pub id: String,
    pub nodes: usize,
    pub colors: usize,
    /// Observed density `2m / n(n-1)`.
    pub density: f64,
    pub seed: u64,
    pub value: usize,
    pub elapsed: Duration,
}

/// Aggregated outcome of running one mode over an instance list.
#[derive(Clone, Debug)]
pub struct DatasetReport {
    pub mode: Mode,
    pub base_seed: u64,
    /// Whether a wall-clock limit governed the runs. A pure iteration
    /// budget leaves this false and the CSV elapsed column blank, so equal
    /// invocations produce byte-identical reports.
    pub timed: bool,
    pub runs: Vec<InstanceRun>,
    /// `(instance id, error)` for runs that failed; excluded from averages.
    pub failures: Vec<(String, String)>,
}

impl DatasetReport {
    pub fn average_value(&self) -> f64 {
        mean(self.runs.iter().map(|r| r.value as f64))
    }

    pub fn average_time(&self) -> f64 {
        mean(self.runs.iter().map(|r| r.elapsed.as_secs_f64()))
    }

    pub fn average_density(&self) -> f64 {
        mean(self.runs.iter().map(|r| r.density))
    }

    /// One-line human summary; averages shown to one decimal place.
    pub fn summary(&self) -> String {
        let (nodes, colors) = self
            .runs
            .first()
            .map_or((0, 0), |r| (r.nodes, r.colors));
        format!(
            "n={} c={} mode={} instances={} avg_value={:.1} avg_time={:.1}s",
            nodes,
            colors,
            mode_token(self.mode),
            self.runs.len(),
            self.average_value(),
            self.average_time(),
        )
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        sum += v;
        count += 1;
    }
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

/// Runs one mode over every instance, seeding run `i` with `base_seed + i`
/// so a dataset is reproducible from a single number. `stop: None` gives
/// each instance the default wall-clock budget for its size. Failures are
/// recorded in the report, not fatal.
pub fn run_dataset(
    instances: &[(String, ColoredGraph)],
    mode: Mode,
    stop: Option<StopCondition>,
    temperature: f64,
    base_seed: u64,
) -> DatasetReport {
    let timed = stop.is_none_or(|s| s.time_limit.is_some());
    let mut runs = Vec::new();
    let mut failures = Vec::new();
    for (index, (id, graph)) in instances.iter().enumerate() {
        let stop = stop.unwrap_or_else(|| {
            StopCondition::time_limit(default_time_limit(graph.node_count()))
        });
        let config = SolverConfig::new(mode, stop)
            .with_seed(base_seed.wrapping_add(index as u64))
            .with_temperature(temperature);
        match solve(graph, &config) {
            Ok(report) => runs.push(InstanceRun {
                id: id.clone(),
                nodes: graph.node_count(),
                colors: graph.color_count(),
                density: graph.density(),
                seed: config.seed,
                value: report.value,
                elapsed: report.elapsed,
            }),
            Err(err) => failures.push((id.clone(), err.to_string())),
        }
    }
    DatasetReport {
        mode,
        base_seed,
        timed,
        runs,
        failures,
    }
}

/// Writes one CSV row per run plus an `instance=AVG` aggregate row per
/// report. Averages keep full precision; the one-decimal rounding is only
/// for human summaries. Elapsed cells stay blank for untimed reports.
pub fn write_csv<W: Write>(mut out: W, reports: &[DatasetReport]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for report in reports {
        let mode = mode_token(report.mode);
        for run in &report.runs {
            let elapsed = if report.timed {
                format!("{:.6}", run.elapsed.as_secs_f64())
            } else {
                String::new()
            };
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                run.nodes, run.colors, run.density, run.id, mode, run.seed, run.value, elapsed
            )?;
        }
        if !report.runs.is_empty() {
            let elapsed = if report.timed {
                format!("{:.6}", report.average_time())
            } else {
                String::new()
            };
            writeln!(
                out,
                "{},{},{},AVG,{},{},{},{}",
                report.runs[0].nodes,
                report.runs[0].colors,
                report.average_density(),
                mode,
                report.base_seed,
                report.average_value(),
                elapsed
            )?;
        }
    }
    Ok(())
}
