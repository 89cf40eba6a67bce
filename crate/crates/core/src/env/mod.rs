//! Occupancy-grid environments and probabilistic roadmaps.
//!
//! Roadmap edges carry two or three objectives: Euclidean length, obstacle
//! closeness (length over clearance) and, when the map declares risk zones,
//! length weighted by the riskiest zone the edge touches.

mod grid;
mod prm;

pub use grid::{load_grid, GridEnvironment, RiskLevel, RiskZone};
pub use prm::{
    build_prm, collision_free, edge_costs, min_clearance_along, PrmConfig, RiskLevels, RiskObjective,
    CLOSENESS_EPSILON_CELLS,
};

/// 50×50 braided maze with 4-cell corridors.
pub const MAZE_MAP: &str = include_str!("../../fixtures/maze_50.map");
/// Cluttered room with low, medium and high risk zones (three objectives).
pub const CLUTTERED_RISK_MAP: &str = include_str!("../../fixtures/cluttered_risk.map");
/// Cluttered room without risk zones (two objectives).
pub const CLUTTERED_MAP: &str = include_str!("../../fixtures/cluttered.map");
