//! Exact WM search against its budgeted and beam-limited variants on a
//! three-objective roadmap, where many labels per vertex are non-dominated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wmlns::env::{build_prm, load_grid, PrmConfig, CLUTTERED_RISK_MAP};
use wmlns::eval::{balanced_weights, pick_endpoints, SolverKind};
use wmlns::graph::wm_cost;
use wmlns::solvers::{wm_label_search, Retention};

fn main() -> wmlns::Result<()> {
    let env = load_grid(CLUTTERED_RISK_MAP)?;
    let graph = build_prm(&env, &PrmConfig::new(1000, 10, 4))?;
    let (s, g) = pick_endpoints(&graph, 0.5, &mut ChaCha8Rng::seed_from_u64(1004));
    let w = balanced_weights(&graph, s, g, SolverKind::WmBeam(4))?;
    println!("{} vertices, w = {:.3?}", graph.n_vertices(), w.as_slice());

    for retention in [
        Retention::Unlimited,
        Retention::Budget(1),
        Retention::Budget(8),
        Retention::Beam(1),
        Retention::Beam(8),
    ] {
        let t = std::time::Instant::now();
        let (path, stats) = wm_label_search(&graph, s, g, &w, retention)?;
        println!(
            "{:<12} WM {:>8.4}  labels created {:>8}  expanded {:>8}  {:>9.2} ms",
            format!("{retention:?}"),
            wm_cost(path.cost(), &w, 0.0)?,
            stats.labels_created,
            stats.labels_expanded,
            t.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}
