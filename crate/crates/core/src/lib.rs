//! Multi-objective graph path planning with weighted-maximum (Chebyshev)
//! scalarization.
//!
//! The crate is organised around five modules:
//!
//! - [`graph`]: multi-objective graphs, paths, the weighted-sum and
//!   weighted-maximum scalarizations and Pareto dominance.
//! - [`solvers`]: weighted-sum A*, exact and budgeted WM label-setting
//!   search, enumeration oracles and supported-solution analysis.
//! - [`lns`]: the WM-LNS metaheuristic (destroy/repair with adaptive
//!   heuristic selection, annealing acceptance and pattern-search repair
//!   weights).
//! - [`env`]: occupancy-grid environments and probabilistic roadmaps with
//!   length, obstacle-closeness and risk objectives.
//! - [`eval`]: coverage and diversity metrics, balanced weights and the
//!   benchmark runner.
//!
//! The `wmlns` binary wraps these in a small CLI (see [`cli`]).
//!
//! ```
//! use wmlns::graph::{wm_cost, WeightVector};
//! use wmlns::instances::three_corridor_gadget;
//! use wmlns::solvers::{wm_exact, ws_astar};
//!
//! let (graph, s, g) = three_corridor_gadget();
//! let w = WeightVector::uniform(2);
//! let ws = ws_astar(&graph, s, g, &w).unwrap();
//! let wm = wm_exact(&graph, s, g, &w).unwrap();
//! assert_eq!(wm.cost().as_slice(), &[6.0, 6.0]);
//! assert!(wm_cost(ws.cost(), &w, 0.0).unwrap() > wm_cost(wm.cost(), &w, 0.0).unwrap());
//! ```

pub mod cli;
pub mod env;
pub mod error;
pub mod eval;
pub mod graph;
pub mod instances;
pub mod lns;
pub mod solvers;

pub use error::{Error, Result};
