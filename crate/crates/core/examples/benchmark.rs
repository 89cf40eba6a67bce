//! A small benchmark campaign: balanced weights on maze roadmaps.

use wmlns::eval::{run_benchmark, BenchmarkConfig, SolverKind};

fn main() -> wmlns::Result<()> {
    let config = BenchmarkConfig {
        maps: vec!["maze".into()],
        prm_nodes: vec![300],
        trials: 8,
        solvers: vec![SolverKind::Ws, SolverKind::Wm, SolverKind::WmPoly(2), SolverKind::WmBeam(2), SolverKind::WmLns],
        ..BenchmarkConfig::default()
    };
    let report = run_benchmark(&config)?;
    println!("{:<10} {:>6} {:>10} {:>10} {:>10}", "solver", "runs", "mean err%", "p90 err%", "time/WS");
    for s in &report.summaries {
        let f = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.2}"));
        println!(
            "{:<10} {:>6} {:>10} {:>10} {:>10}",
            s.solver,
            s.runs,
            f(s.mean_error_pct),
            f(s.p90_error_pct),
            f(s.mean_runtime_ratio)
        );
    }
    let mut csv = Vec::new();
    report.write_csv(&mut csv)?;
    println!("\nCSV has {} rows", String::from_utf8_lossy(&csv).lines().count() - 1);
    Ok(())
}
