//! Command-line front end. The `wmlns` binary calls [`run`].
//!
//! Machine-readable output (JSON, CSV) goes to stdout or `--out`; progress
//! messages go to stderr. Exit codes: 0 success, 2 input error, 3 no path.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::env::{build_prm, GridEnvironment, PrmConfig, RiskObjective};
use crate::error::{Error, Result};
use crate::eval::{run_benchmark, run_sweep, summarize_sweeps, sweep_weights, write_records_csv, BenchmarkConfig, SolverKind, DEFAULT_COVERAGE_SAMPLES};
use crate::graph::{wm_cost, ws_cost, MoGraph, WeightVector};
use crate::lns::LnsParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_PATH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wmlns", version, about = "Weighted-maximum multi-objective path planning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a probabilistic roadmap from an ASCII map and write it as graph JSON.
    BuildPrm {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        prm: PrmArgs,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one instance and print the solution as JSON.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        start: u64,
        #[arg(long)]
        goal: u64,
        #[arg(long, default_value = "wm-lns")]
        solver: String,
        /// Comma-separated weights; normalized onto the simplex.
        #[arg(long)]
        weights: Option<String>,
        /// LNS parameter overrides: inline JSON object or a JSON file.
        #[arg(long)]
        params: Option<String>,
    },
    /// Run a solver over random weights; writes one CSV row per weight.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        start: u64,
        #[arg(long)]
        goal: u64,
        #[arg(long, default_value = "wm-lns")]
        solver: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = DEFAULT_COVERAGE_SAMPLES)]
        samples: usize,
        /// CSV output file; the JSON summary then goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark campaign described by a JSON config.
    Bench {
        #[arg(long)]
        config: PathBuf,
        /// Report path; a CSV with the same stem is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct PrmArgs {
    #[arg(long, default_value_t = 500)]
    nodes: usize,
    #[arg(long, default_value_t = 10)]
    k_nn: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Risk objective: auto (on when the map has zones), on or off.
    #[arg(long, default_value = "auto")]
    risk: String,
}

impl PrmArgs {
    fn config(&self) -> Result<PrmConfig> {
        let risk = match self.risk.as_str() {
            "auto" => RiskObjective::Auto,
            "on" => RiskObjective::On,
            "off" => RiskObjective::Off,
            other => return Err(Error::Config(format!("--risk must be auto, on or off, got `{other}`"))),
        };
        Ok(PrmConfig { node_count: self.nodes, k_nn: self.k_nn, seed: self.seed, risk, ..PrmConfig::default() })
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph JSON file.
    #[arg(long, conflicts_with = "map", required_unless_present = "map")]
    graph: Option<PathBuf>,
    /// ASCII map; a roadmap is built with the PRM flags.
    #[arg(long)]
    map: Option<PathBuf>,
    #[command(flatten)]
    prm: PrmArgs,
}

impl InputArgs {
    fn load(&self) -> Result<MoGraph> {
        match (&self.graph, &self.map) {
            (Some(g), _) => MoGraph::read_json(g),
            (None, Some(m)) => build_prm(&GridEnvironment::read(m)?, &self.prm.config()?),
            (None, None) => Err(Error::Config("one of --graph or --map is required".into())),
        }
    }
}

fn vertex(graph: &MoGraph, id: u64) -> Result<usize> {
    graph
        .index_of(id)
        .ok_or_else(|| Error::Config(format!("graph has no vertex with id {id}")))
}

fn parse_weights(text: Option<&str>, n: usize) -> Result<WeightVector> {
    let Some(text) = text else {
        return Ok(WeightVector::uniform(n));
    };
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidWeights(format!("`{t}` is not a number")))
        })
        .collect::<Result<Vec<f64>>>()?;
    if values.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: values.len() });
    }
    WeightVector::normalized(values)
}

fn parse_params(text: Option<&str>, n: usize) -> Result<LnsParams> {
    let base = LnsParams::for_objectives(n);
    let Some(text) = text else {
        return Ok(base);
    };
    let body = if text.trim_start().starts_with('{') {
        text.to_string()
    } else {
        std::fs::read_to_string(text)?
    };
    let value: serde_json::Value = serde_json::from_str(&body)
        .map_err(|e| Error::Config(format!("--params is not valid JSON: {e}")))?;
    base.with_overrides(&value)
}

#[derive(Serialize)]
struct SolveOutput {
    solver: String,
    start: u64,
    goal: u64,
    weights: Vec<f64>,
    path: Vec<u64>,
    cost: Vec<f64>,
    wm_cost: f64,
    ws_cost: f64,
    runtime_s: f64,
}

#[derive(Serialize)]
struct PrmOutput {
    vertices: usize,
    edges: usize,
    objectives: usize,
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::BuildPrm { map, prm, out: path } => {
            let env = GridEnvironment::read(&map)?;
            let graph = build_prm(&env, &prm.config()?)?;
            let summary = PrmOutput {
                vertices: graph.n_vertices(),
                edges: graph.n_edges(),
                objectives: graph.n_objectives(),
            };
            match path {
                Some(p) => {
                    graph.write_json(&p)?;
                    writeln!(out, "{}", serde_json::to_string(&summary)?)?;
                }
                None => {
                    writeln!(out, "{}", graph.to_json_string()?)?;
                    writeln!(err, "roadmap: {} vertices, {} edges", summary.vertices, summary.edges)?;
                }
            }
        }
        Command::Solve { input, start, goal, solver, weights, params } => {
            let kind: SolverKind = solver.parse()?;
            let graph = input.load()?;
            let (s, g) = (vertex(&graph, start)?, vertex(&graph, goal)?);
            let n = graph.n_objectives();
            let w = parse_weights(weights.as_deref(), n)?;
            let lns = parse_params(params.as_deref(), n)?;
            let seed = lns.seed;
            let (res, secs) = kind.solve_timed(&graph, s, g, &w, &lns, seed);
            let path = res?;
            let result = SolveOutput {
                solver: kind.to_string(),
                start,
                goal,
                weights: w.as_slice().to_vec(),
                path: path.vertices().iter().map(|&v| graph.id(v)).collect(),
                cost: path.cost().as_slice().to_vec(),
                wm_cost: wm_cost(path.cost(), &w, 0.0)?,
                ws_cost: ws_cost(path.cost(), &w)?,
                runtime_s: secs,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&result)?)?;
        }
        Command::Sweep { input, start, goal, solver, trials, params, samples, out: path } => {
            if trials == 0 {
                return Err(Error::Config("--trials must be at least 1".into()));
            }
            let kind: SolverKind = solver.parse()?;
            let graph = input.load()?;
            let (s, g) = (vertex(&graph, start)?, vertex(&graph, goal)?);
            let n = graph.n_objectives();
            let lns = parse_params(params.as_deref(), n)?;
            let weights = sweep_weights(n, trials, lns.seed);
            writeln!(err, "sweeping {trials} weights with {kind}")?;
            let records = run_sweep(&graph, s, g, kind, &weights, &lns, lns.seed);
            let summary = &summarize_sweeps(&[&records], samples, lns.seed)[0];
            let summary = serde_json::to_string_pretty(summary)?;
            match path {
                Some(p) => {
                    write_records_csv(&records, std::fs::File::create(p)?)?;
                    writeln!(out, "{summary}")?;
                }
                None => {
                    write_records_csv(&records, &mut *out)?;
                    writeln!(err, "{summary}")?;
                }
            }
        }
        Command::Bench { config, out: path, jobs } => {
            let mut config = BenchmarkConfig::from_json_str(&std::fs::read_to_string(&config)?)?;
            if let Some(j) = jobs {
                config.jobs = j;
            }
            writeln!(
                err,
                "benchmark: {} map(s) × {} size(s) × {} trial(s), solvers {:?}",
                config.maps.len(),
                config.prm_nodes.len(),
                config.trials,
                config.solvers.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            )?;
            let report = run_benchmark(&config)?;
            match path {
                Some(p) => {
                    report.write_files(&p)?;
                    writeln!(out, "{}", serde_json::to_string_pretty(&report.summaries)?)?;
                }
                None => writeln!(out, "{}", report.to_json_string()?)?,
            }
        }
    }
    Ok(())
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoPath { .. } => EXIT_NO_PATH,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
