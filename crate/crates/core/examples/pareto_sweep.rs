//! Random-weight sweep on the cluttered two-objective map: WS only reaches
//! the supported part of the front, WM-LNS also fills in the concave parts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wmlns::env::{build_prm, load_grid, PrmConfig, CLUTTERED_MAP};
use wmlns::eval::{pick_endpoints, run_sweep, summarize_sweeps, sweep_weights, SolverKind};
use wmlns::lns::LnsParams;

fn main() -> wmlns::Result<()> {
    let env = load_grid(CLUTTERED_MAP)?;
    let graph = build_prm(&env, &PrmConfig::new(500, 10, 1))?;
    let (s, g) = pick_endpoints(&graph, 0.6, &mut ChaCha8Rng::seed_from_u64(1));
    let weights = sweep_weights(2, 300, 7);
    let params = LnsParams::default();

    let ws = run_sweep(&graph, s, g, SolverKind::Ws, &weights, &params, 0);
    let lns = run_sweep(&graph, s, g, SolverKind::WmLns, &weights, &params, 0);
    for summary in summarize_sweeps(&[&ws, &lns], 100_000, 1) {
        println!(
            "{:<7} coverage {:.3}  unique Pareto solutions {:>3}",
            summary.solver, summary.coverage, summary.unique_solutions
        );
    }
    Ok(())
}
