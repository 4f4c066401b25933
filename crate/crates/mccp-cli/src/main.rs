//! `mccp` — solve, generate, verify and benchmark coloring-cut instances.
//!
//! Exit codes: 0 success; 1 solver/oracle mismatch in `verify`; 2 bad
//! input (unreadable file, malformed instance, invalid flags).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mccp_cli::bench::{default_time_limit, mode_token, run_dataset, write_csv};
use mccp_core::{
    brute_force_optimum, generate_instance, global_min_cut, parse_instance, solve,
    write_instance, ColorSet, ColoredGraph, GeneratorParams, Mode, SolverConfig, StopCondition,
};
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "mccp",
    version,
    about = "Coloring-cut solver: find a disconnecting edge set using the fewest colors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file and print the best cut found.
    Solve(SolveArgs),
    /// Write randomly generated instance files.
    Generate(GenerateArgs),
    /// Solve an instance and compare the result against an exact oracle.
    Verify(VerifyArgs),
    /// Solve every .mcc instance in a directory and report dataset averages.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    /// Always add the color splitting the graph the most.
    Greedy,
    /// Boltzmann-weighted color selection.
    Prob,
}

impl From<CliMode> for Mode {
    fn from(mode: CliMode) -> Mode {
        match mode {
            CliMode::Greedy => Mode::Greedy,
            CliMode::Prob => Mode::Probabilistic,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file to solve.
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "greedy")]
    mode: CliMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget in seconds; defaults to the per-size table when no
    /// iteration cap is given either.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Outer-iteration budget; combine with --time-limit to stop at
    /// whichever trips first.
    #[arg(long)]
    max_iters: Option<u64>,
    /// Temperature of the probabilistic selection.
    #[arg(long, default_value_t = 1.0)]
    temperature: f64,
    /// Also print the minimal cut, one "u v color" line per edge.
    #[arg(long)]
    emit_cut: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of nodes.
    #[arg(long)]
    nodes: usize,
    /// Number of colors; every color appears on at least one edge.
    #[arg(long)]
    colors: usize,
    /// Target edge density in (0, 1]; the expected edge count is
    /// density * nodes * (nodes - 1) / 2.
    #[arg(long)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// How many instances to generate; file i uses seed + i.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    /// Exact optimum by subset enumeration (exponential in colors).
    Brute,
    /// Global minimum edge cut; valid only when every edge color is unique.
    Mincut,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file to check.
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "greedy")]
    mode: CliMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Outer-iteration budget for the solver side of the comparison.
    #[arg(long, default_value_t = 10_000)]
    max_iters: u64,
    #[arg(long, default_value_t = 1.0)]
    temperature: f64,
    #[arg(long, value_enum, default_value = "brute")]
    oracle: Oracle,
    /// Largest color count the subset-enumeration oracle will accept.
    #[arg(long, default_value_t = 20)]
    max_colors: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeSelect {
    Greedy,
    Prob,
    /// Run greedy and probabilistic back to back.
    Both,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory containing .mcc instance files (non-recursive).
    #[arg(long)]
    dir: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeSelect,
    /// Write the CSV report to this file instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Base seed; instance i runs with seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget per run in seconds; defaults to the per-size table
    /// when no iteration cap is given either.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Outer-iteration budget per run; used alone it makes the CSV
    /// byte-reproducible (the elapsed column is left blank).
    #[arg(long)]
    max_iters: Option<u64>,
    #[arg(long, default_value_t = 1.0)]
    temperature: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_instance(path: &Path) -> Result<ColoredGraph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_instance(&text).map_err(|err| anyhow!("{}: {err}", path.display()))
}

/// Builds the stop condition from the two budget flags; with neither set,
/// the instance size picks a wall-clock budget from the default table.
fn resolve_stop(
    time_limit: Option<f64>,
    max_iters: Option<u64>,
    node_count: usize,
) -> Result<Option<StopCondition>> {
    if let Some(seconds) = time_limit {
        if seconds <= 0.0 || seconds.is_nan() {
            bail!("--time-limit must be positive, got {seconds}");
        }
    }
    if max_iters == Some(0) {
        bail!("--max-iters must be at least 1");
    }
    Ok(match (time_limit, max_iters) {
        (None, None) => Some(StopCondition::time_limit(default_time_limit(node_count))),
        (t, i) => Some(StopCondition {
            time_limit: t.map(Duration::from_secs_f64),
            max_outer_iterations: i,
        }),
    })
}

fn color_list(colors: &ColorSet) -> String {
    colors
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let graph = load_instance(&args.instance)?;
    let stop = resolve_stop(args.time_limit, args.max_iters, graph.node_count())?
        .expect("solve always resolves a stop condition");
    let config = SolverConfig::new(args.mode.into(), stop)
        .with_seed(args.seed)
        .with_temperature(args.temperature);
    let report = solve(&graph, &config).map_err(|err| anyhow!("{err}"))?;

    println!("instance={}", args.instance.display());
    println!(
        "nodes={} edges={} colors={}",
        graph.node_count(),
        graph.edge_count(),
        graph.color_count()
    );
    println!("mode={} seed={}", mode_token(config.mode), config.seed);
    println!("value={}", report.value);
    println!("cut_colors={}", color_list(&report.cut_colors));
    println!("kept_colors={}", color_list(&report.kept_colors));
    println!("outer_iterations={}", report.outer_iterations);
    println!("shakes={}", report.shakes);
    println!("elapsed_s={:.6}", report.elapsed.as_secs_f64());
    if args.emit_cut {
        println!("disconnecting_edges={}", report.disconnecting.len());
        println!("minimal_cut={}", report.minimal_cut.len());
        for edge in &report.minimal_cut {
            println!("{} {} {}", edge.u, edge.v, edge.color);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode> {
    if args.count == 0 {
        bail!("--count must be at least 1");
    }
    fs::create_dir_all(&args.out)
        .with_context(|| format!("cannot create {}", args.out.display()))?;
    for index in 0..args.count {
        let params = GeneratorParams {
            node_count: args.nodes,
            color_count: args.colors,
            density: args.density,
            seed: args.seed.wrapping_add(index as u64),
        };
        let graph = generate_instance(&params).map_err(|err| anyhow!("{err}"))?;
        let name = format!(
            "n{}_c{}_d{}_s{}_i{:03}.mcc",
            args.nodes, args.colors, args.density, args.seed, index
        );
        let path = args.out.join(name);
        fs::write(&path, write_instance(&graph))
            .with_context(|| format!("cannot write {}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph = load_instance(&args.instance)?;
    let optimum = match args.oracle {
        Oracle::Brute => {
            brute_force_optimum(&graph, args.max_colors)
                .map_err(|err| anyhow!("{err}"))?
                .value
        }
        Oracle::Mincut => {
            if graph.edge_count() != graph.color_count() {
                bail!(
                    "--oracle mincut needs every edge to carry a distinct color; \
                     this instance has {} edges and {} colors",
                    graph.edge_count(),
                    graph.color_count()
                );
            }
            global_min_cut(&graph)
        }
    };

    let config = SolverConfig::new(
        args.mode.into(),
        StopCondition::max_outer_iterations(args.max_iters),
    )
    .with_seed(args.seed)
    .with_temperature(args.temperature);
    let report = solve(&graph, &config).map_err(|err| anyhow!("{err}"))?;

    println!("value={}", report.value);
    println!("optimum={optimum}");
    if report.value == optimum {
        println!("verified=true");
        Ok(ExitCode::SUCCESS)
    } else if report.value > optimum {
        println!("verified=false gap={}", report.value - optimum);
        Ok(ExitCode::from(1))
    } else {
        // A heuristic can never beat a correct exact bound; a reported
        // value below it means an infeasible cut slipped through.
        eprintln!(
            "error: solver value {} is below the exact optimum {}; the reported cut cannot be valid",
            report.value, optimum
        );
        Ok(ExitCode::from(1))
    }
}

fn load_dir(dir: &Path) -> Result<Vec<(String, ColoredGraph)>> {
    let entries = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.path())
        .filter(|path| path.extension().is_some_and(|ext| ext == "mcc"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|path| {
            let id = path
                .file_stem()
                .map(|stem| stem.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((id, load_instance(path)?))
        })
        .collect()
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let instances = load_dir(&args.dir)?;
    if instances.is_empty() {
        bail!("no .mcc instances found in {}", args.dir.display());
    }
    let stop = match (args.time_limit, args.max_iters) {
        (None, None) => None,
        (t, i) => resolve_stop(t, i, 0)?,
    };

    let modes: &[Mode] = match args.mode {
        ModeSelect::Greedy => &[Mode::Greedy],
        ModeSelect::Prob => &[Mode::Probabilistic],
        ModeSelect::Both => &[Mode::Greedy, Mode::Probabilistic],
    };
    let mut reports = Vec::new();
    for &mode in modes {
        let report = run_dataset(&instances, mode, stop, args.temperature, args.seed);
        for (id, err) in &report.failures {
            eprintln!("warning: {id}: {err}");
        }
        eprintln!("{}", report.summary());
        reports.push(report);
    }

    match &args.csv {
        Some(path) => {
            let file = fs::File::create(path)
                .with_context(|| format!("cannot write {}", path.display()))?;
            write_csv(io::BufWriter::new(file), &reports)?;
        }
        None => write_csv(io::stdout().lock(), &reports)?,
    }
    Ok(ExitCode::SUCCESS)
}
