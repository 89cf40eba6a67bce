//! Evaluation: coverage and diversity metrics, balanced weights, weight
//! sweeps and the benchmark runner.

mod balance;
mod bench;
mod metrics;
mod record;
mod solver;
mod sweep;

pub use balance::{balanced_weights, BALANCE_ROUNDS};
pub use bench::{load_map, pick_endpoints, run_benchmark, BenchmarkConfig, BenchmarkReport, SolverSummary, WeightMode};
pub use metrics::{
    coverage, mean, normalize_objectives, percent_error, quantile, unique_solutions, weighted_spread,
    DEFAULT_COVERAGE_SAMPLES,
};
pub use record::{write_records_csv, CsvRow, SolutionRecord};
pub use solver::{SolverKind, DEFAULT_BEAM_WIDTH, DEFAULT_POLY_BUDGET};
pub use sweep::{run_sweep, summarize_sweeps, sweep_weights, SweepSummary};
