//! Baseline planners and exhaustive oracles.
//!
//! * [`ws_astar`]: weighted-sum scalarization solved with A*.
//! * [`wm_exact`], [`wm_poly`], [`wm_beam`]: label-setting WM search with
//!   unlimited, first-in budgeted and beam-limited per-vertex label sets.
//! * [`brute_force_pareto`], [`brute_force_wm`]: enumeration oracles for
//!   graphs of at most [`BRUTE_FORCE_VERTEX_LIMIT`] vertices.
//! * [`supported_solutions`]: the weighted-sum reachable part of a front.
//! * [`bwsa_transform`]: the edge-indicator instance augmentation.

mod astar;
mod brute;
mod bwsa;
mod heuristic;
mod label;
mod supported;

pub use astar::ws_astar;
pub(crate) use astar::{ws_search_with, WsScratch};
pub use brute::{brute_force_paths, brute_force_pareto, brute_force_wm, BRUTE_FORCE_VERTEX_LIMIT};
pub use bwsa::bwsa_transform;
pub use heuristic::HeuristicTable;
pub use label::{wm_beam, wm_exact, wm_label_search, wm_poly, Retention, SearchStats};
pub use supported::{extreme_supported_solutions, support_margins, supported_solutions, SUPPORT_TOL};
