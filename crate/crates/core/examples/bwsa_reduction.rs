//! Edge-indicator augmentation: after appending one 0/1 objective per edge,
//! every path is Pareto-optimal and extreme, and with zero weight on the new
//! objectives the WM optimum is unchanged.

use wmlns::graph::{wm_cost, WeightVector};
use wmlns::instances::three_corridor_gadget;
use wmlns::solvers::{brute_force_paths, bwsa_transform, extreme_supported_solutions, wm_exact};

fn main() -> wmlns::Result<()> {
    let (graph, s, g) = three_corridor_gadget();
    let w = WeightVector::uniform(2);
    let (big, w_big) = bwsa_transform(&graph, &w)?;
    println!(
        "objectives {} -> {}, weight {:?} -> {:?}",
        graph.n_objectives(),
        big.n_objectives(),
        w.as_slice(),
        w_big.as_slice()
    );

    let costs: Vec<_> = brute_force_paths(&big, s, g)?.iter().map(|p| p.cost().clone()).collect();
    let extreme = extreme_supported_solutions(&costs)?;
    println!("{} paths, {} extreme supported", costs.len(), extreme.len());

    let before = wm_exact(&graph, s, g, &w)?;
    let after = wm_exact(&big, s, g, &w_big)?;
    println!(
        "WM optimum: original {:.1}, augmented {:.1}",
        wm_cost(before.cost(), &w, 0.0)?,
        wm_cost(after.cost(), &w_big, 0.0)?
    );
    Ok(())
}
