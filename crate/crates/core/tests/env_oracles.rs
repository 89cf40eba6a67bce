mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wmlns::env::{
    build_prm, collision_free, edge_costs, load_grid, min_clearance_along, PrmConfig, RiskLevel, RiskLevels,
    CLUTTERED_MAP, CLUTTERED_RISK_MAP, MAZE_MAP,
};

fn euclid(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

#[test]
fn clearance_matches_brute_force_on_fixtures() {
    for map in [MAZE_MAP, CLUTTERED_MAP] {
        let env = load_grid(map).unwrap();
        let want = common::brute_clearance(&env);
        for r in 0..env.rows() {
            for c in 0..env.cols() {
                assert!((env.cell_clearance(r, c) - want[r * env.cols() + c]).abs() < 1e-9, "cell ({r}, {c})");
            }
        }
    }
}

#[test]
fn clearance_matches_brute_force_on_random_grids() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let (rows, cols) = (rng.random_range(1..25), rng.random_range(1..25));
        let text: String = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.random_bool(0.15) { '#' } else { '.' }).collect::<String>() + "\n")
            .collect();
        let env = load_grid(&format!("cell_size 0.5\n{text}")).unwrap();
        if env.free_cell_count() == rows * cols {
            continue;
        }
        let want = common::brute_clearance(&env);
        for r in 0..rows {
            for c in 0..cols {
                assert!((env.cell_clearance(r, c) - want[r * cols + c]).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn collision_check_matches_supercover_oracle() {
    let env = load_grid(MAZE_MAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let (w, h) = (env.width(), env.height());
    let (mut free, mut blocked) = (0, 0);
    for _ in 0..10_000 {
        let a = [rng.random_range(0.0..w), rng.random_range(0.0..h)];
        let len = rng.random_range(0.0..12.0);
        let th = rng.random_range(0.0..std::f64::consts::TAU);
        let b = [(a[0] + len * th.cos()).clamp(0.0, w - 1e-9), (a[1] + len * th.sin()).clamp(0.0, h - 1e-9)];
        let want = common::supercover(&env, a, b).iter().all(|&(r, c)| !env.is_obstacle(r, c));
        assert_eq!(collision_free(&env, a, b).unwrap(), want, "{a:?} -> {b:?}");
        if want { free += 1 } else { blocked += 1 }
    }
    assert!(free > 1000 && blocked > 1000);
}

#[test]
fn diagonal_squeeze_between_touching_obstacles_is_blocked() {
    let env = load_grid("#.\n.#\n").unwrap();
    assert!(!collision_free(&env, [0.5, 1.5], [1.5, 0.5]).unwrap());
    let open = load_grid("..\n..\n").unwrap();
    assert!(collision_free(&open, [0.5, 1.5], [1.5, 0.5]).unwrap());
}

#[test]
fn risk_levels_match_geometric_oracle() {
    let env = load_grid(CLUTTERED_RISK_MAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let (w, h) = (env.width(), env.height());
    let rank = |l: RiskLevel| l as u8;
    for _ in 0..10_000 {
        let a = [rng.random_range(0.0..w), rng.random_range(0.0..h)];
        let b = [rng.random_range(0.0..w), rng.random_range(0.0..h)];
        let want = env
            .risk_zones()
            .iter()
            .filter(|z| common::segment_meets_rect(a, b, z.x0, z.y0, z.x1, z.y1))
            .map(|z| z.level)
            .max_by_key(|l| rank(*l));
        assert_eq!(env.max_risk_level(a, b), want);
    }
}

#[test]
fn roadmap_edges_avoid_obstacles_and_carry_consistent_costs() {
    let env = load_grid(MAZE_MAP).unwrap();
    let g = build_prm(&env, &PrmConfig::new(500, 10, 34)).unwrap();
    let pos = g.positions().unwrap();
    for (u, v, c) in common::edge_list(&g) {
        let (a, b) = (pos[u], pos[v]);
        for i in 0..=200 {
            let t = i as f64 / 200.0;
            assert!(env.is_free([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]));
        }
        assert!(common::supercover(&env, a, b).iter().all(|&(r, c)| !env.is_obstacle(r, c)));
        let len = euclid(a, b);
        assert!((c[0] - len).abs() < 1e-9);
        let clear = min_clearance_along(&env, a, b).unwrap();
        assert!((c[1] - len / (0.1 * env.cell_size() + clear)).abs() < 1e-9);
        assert!(clear <= env.clearance_at(a).unwrap() && clear <= env.clearance_at(b).unwrap());
    }
}

#[test]
fn roadmap_is_connected_and_deterministic() {
    let env = load_grid(CLUTTERED_RISK_MAP).unwrap();
    let cfg = PrmConfig::new(300, 10, 35);
    let a = build_prm(&env, &cfg).unwrap();
    let b = build_prm(&env, &cfg).unwrap();
    assert_eq!(a.n_objectives(), 3);
    assert_eq!(common::edge_list(&a), common::edge_list(&b));
    // Every vertex reaches vertex 0.
    for v in 0..a.n_vertices() {
        assert!(common::dijkstra_scalar(&a, 0, v, &[1.0, 0.0, 0.0]).is_some());
    }
}

#[test]
fn risk_cost_uses_the_highest_zone_touched() {
    let env = load_grid(CLUTTERED_RISK_MAP).unwrap();
    let levels = RiskLevels::default();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut checked = 0;
    while checked < 500 {
        let a = [rng.random_range(0.0..env.width()), rng.random_range(0.0..env.height())];
        let b = [a[0] + rng.random_range(-3.0..3.0), a[1] + rng.random_range(-3.0..3.0)];
        if !env.in_bounds(b) || !env.is_free(a) || !env.is_free(b) || !collision_free(&env, a, b).unwrap() {
            continue;
        }
        let c = edge_costs(&env, a, b, Some(&levels)).unwrap();
        let level = env.max_risk_level(a, b).map_or(0.0, |l| levels.value(l));
        assert!((c[2] - euclid(a, b) * level).abs() < 1e-9);
        checked += 1;
    }
}

#[test]
fn map_text_roundtrip() {
    for map in [MAZE_MAP, CLUTTERED_RISK_MAP] {
        let env = load_grid(map).unwrap();
        let back = load_grid(&env.to_text()).unwrap();
        assert_eq!(back.to_text(), env.to_text());
        assert_eq!(back.risk_zones(), env.risk_zones());
    }
}
