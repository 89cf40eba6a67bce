//! WM-LNS on a maze roadmap, compared with the exact solver.

use wmlns::env::{build_prm, load_grid, PrmConfig, MAZE_MAP};
use wmlns::eval::{balanced_weights, percent_error, SolverKind};
use wmlns::graph::wm_cost;
use wmlns::lns::{solve_with_trace, Decision, LnsParams};
use wmlns::solvers::wm_exact;

fn main() -> wmlns::Result<()> {
    let env = load_grid(MAZE_MAP)?;
    let graph = build_prm(&env, &PrmConfig::new(400, 10, 2))?;
    let (s, g) = (0, graph.n_vertices() - 1);
    let w = balanced_weights(&graph, s, g, SolverKind::Wm)?;
    println!("roadmap: {} vertices, balanced w = {:.3?}", graph.n_vertices(), w.as_slice());

    let run = solve_with_trace(&graph, s, g, &w, &LnsParams::default().with_seed(1))?;
    let exact = wm_exact(&graph, s, g, &w)?;
    let wm = |c| wm_cost(c, &w, 0.0);
    println!("initial (beam 1): WM {:.4}", wm(run.initial.cost())?);
    println!("WM-LNS after {} iterations: WM {:.4}", run.iterations, wm(run.best.cost())?);
    println!("exact:            WM {:.4}", wm(exact.cost())?);
    println!("error: {:.3}%", percent_error(wm(run.best.cost())?, wm(exact.cost())?)?);

    let count = |d: Decision| run.trace.iter().filter(|r| r.decision == d).count();
    println!(
        "decisions: {} accepted, {} rejected, {} equal, {} failed repairs; {} reheats",
        count(Decision::Accept),
        count(Decision::Reject),
        count(Decision::Skip),
        count(Decision::RepairFailed),
        run.trace.iter().filter(|r| r.reheated).count()
    );
    println!("final heuristic scores (worst, best, unbalanced, balanced, random): {:.2?}", run.heuristic_scores);
    Ok(())
}
