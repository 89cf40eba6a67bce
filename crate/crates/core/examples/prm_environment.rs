//! Loading an ASCII map, inspecting its clearance field and building a
//! three-objective roadmap.

use wmlns::env::{build_prm, collision_free, edge_costs, load_grid, PrmConfig, CLUTTERED_RISK_MAP};

fn main() -> wmlns::Result<()> {
    let env = load_grid(CLUTTERED_RISK_MAP)?;
    println!(
        "{}×{} cells, {} free, {} risk zones",
        env.rows(),
        env.cols(),
        env.free_cell_count(),
        env.risk_zones().len()
    );
    let max_clear = (0..env.rows())
        .flat_map(|r| (0..env.cols()).map(move |c| (r, c)))
        .map(|(r, c)| env.cell_clearance(r, c))
        .fold(0.0, f64::max);
    println!("largest clearance: {max_clear:.2}");

    let config = PrmConfig::new(500, 10, 3);
    let a = [1.5, 1.5];
    let b = [58.5, 58.5];
    println!("straight line corner to corner is free: {}", collision_free(&env, a, b)?);
    let levels = config.risk_levels;
    let short = [6.5, 1.5];
    println!("edge {a:?} -> {short:?}: {}", edge_costs(&env, a, short, Some(&levels))?);

    let graph = build_prm(&env, &config)?;
    println!(
        "roadmap: {} vertices, {} edges, {} objectives",
        graph.n_vertices(),
        graph.n_edges(),
        graph.n_objectives()
    );
    let json = graph.to_json_string()?;
    println!("graph JSON: {} bytes", json.len());
    Ok(())
}
