//! Weighted sum versus weighted maximum on three disjoint corridors.
//!
//! The balanced corridor (6, 6) is Pareto-optimal but lies inside the convex
//! hull of the two extreme corridors, so no weighted sum ever selects it.

use wmlns::graph::{wm_cost, ws_cost, WeightVector};
use wmlns::instances::three_corridor_gadget;
use wmlns::solvers::{brute_force_pareto, supported_solutions, wm_exact, ws_astar};

fn main() -> wmlns::Result<()> {
    let (graph, s, g) = three_corridor_gadget();

    let front: Vec<_> = brute_force_pareto(&graph, s, g)?.into_iter().map(|(_, c)| c).collect();
    println!("Pareto front:");
    for c in &front {
        println!("  {c}");
    }
    println!("supported by a weighted sum:");
    for c in supported_solutions(&front)? {
        println!("  {c}");
    }

    println!("\n{:>12} {:>24} {:>24}", "w1", "WS path", "WM path");
    for w1 in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let w = WeightVector::new(vec![w1, 1.0 - w1])?;
        let ws = ws_astar(&graph, s, g, &w)?;
        let wm = wm_exact(&graph, s, g, &w)?;
        println!("{w1:>12.1} {:>24} {:>24}", ws.cost().to_string(), wm.cost().to_string());
    }

    let w = WeightVector::uniform(2);
    let ws = ws_astar(&graph, s, g, &w)?;
    let wm = wm_exact(&graph, s, g, &w)?;
    println!(
        "\nuniform weights: WS path has WS {:.1} / WM {:.1}; WM path has WS {:.1} / WM {:.1}",
        ws_cost(ws.cost(), &w)?,
        wm_cost(ws.cost(), &w, 0.0)?,
        ws_cost(wm.cost(), &w)?,
        wm_cost(wm.cost(), &w, 0.0)?
    );
    Ok(())
}
