use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MoGraph, Path, WeightVector};
use crate::lns::{self, LnsParams};
use crate::solvers::{wm_beam, wm_exact, wm_poly, ws_astar};

pub const DEFAULT_POLY_BUDGET: usize = 4;
pub const DEFAULT_BEAM_WIDTH: usize = 4;

/// A planner selectable by name: `ws`, `wm`, `wm-poly[:budget]`,
/// `wm-beam[:width]` or `wm-lns`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Ws,
    Wm,
    WmPoly(usize),
    WmBeam(usize),
    WmLns,
}

impl SolverKind {
    /// Solves one instance. `lns` is only consulted by WM-LNS; its seed is
    /// replaced by `seed`.
    pub fn solve(
        self,
        graph: &MoGraph,
        start: usize,
        goal: usize,
        w: &WeightVector,
        lns: &LnsParams,
        seed: u64,
    ) -> Result<Path> {
        match self {
            SolverKind::Ws => ws_astar(graph, start, goal, w),
            SolverKind::Wm => wm_exact(graph, start, goal, w),
            SolverKind::WmPoly(b) => wm_poly(graph, start, goal, w, b),
            SolverKind::WmBeam(b) => wm_beam(graph, start, goal, w, b),
            SolverKind::WmLns => lns::solve(graph, start, goal, w, &lns.clone().with_seed(seed)),
        }
    }

    /// Like [`SolverKind::solve`], also returning wall-clock seconds of the call.
    pub fn solve_timed(
        self,
        graph: &MoGraph,
        start: usize,
        goal: usize,
        w: &WeightVector,
        lns: &LnsParams,
        seed: u64,
    ) -> (Result<Path>, f64) {
        let t = Instant::now();
        let r = self.solve(graph, start, goal, w, lns, seed);
        (r, t.elapsed().as_secs_f64())
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverKind::Ws => f.write_str("ws"),
            SolverKind::Wm => f.write_str("wm"),
            SolverKind::WmPoly(b) if *b == DEFAULT_POLY_BUDGET => f.write_str("wm-poly"),
            SolverKind::WmPoly(b) => write!(f, "wm-poly:{b}"),
            SolverKind::WmBeam(b) if *b == DEFAULT_BEAM_WIDTH => f.write_str("wm-beam"),
            SolverKind::WmBeam(b) => write!(f, "wm-beam:{b}"),
            SolverKind::WmLns => f.write_str("wm-lns"),
        }
    }
}

impl FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let size = |default: usize| -> Result<usize> {
            match arg {
                None => Ok(default),
                Some(a) => a
                    .parse::<usize>()
                    .ok()
                    .filter(|v| *v > 0)
                    .ok_or_else(|| Error::Config(format!("bad solver size `{a}` in `{s}`"))),
            }
        };
        let kind = match name {
            "ws" => SolverKind::Ws,
            "wm" | "wm-exact" => SolverKind::Wm,
            "wm-poly" => SolverKind::WmPoly(size(DEFAULT_POLY_BUDGET)?),
            "wm-beam" => SolverKind::WmBeam(size(DEFAULT_BEAM_WIDTH)?),
            "wm-lns" => SolverKind::WmLns,
            _ => return Err(Error::Config(format!("unknown solver `{s}`"))),
        };
        if arg.is_some() && !matches!(kind, SolverKind::WmPoly(_) | SolverKind::WmBeam(_)) {
            return Err(Error::Config(format!("solver `{name}` takes no size argument")));
        }
        Ok(kind)
    }
}

impl Serialize for SolverKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SolverKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
