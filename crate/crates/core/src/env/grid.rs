use std::fmt;
use std::path::Path as FsPath;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RiskLevel {
    Low,
    Medium,
    High,
}

impl FromStr for RiskLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "low" => Ok(RiskLevel::Low),
            "medium" | "med" => Ok(RiskLevel::Medium),
            "high" => Ok(RiskLevel::High),
            _ => Err(Error::Environment(format!("unknown risk level `{s}`"))),
        }
    }
}

impl fmt::Display for RiskLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RiskLevel::Low => "low",
            RiskLevel::Medium => "medium",
            RiskLevel::High => "high",
        })
    }
}

/// Axis-aligned rectangle `[x0, x1] × [y0, y1]` in world coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RiskZone {
    pub level: RiskLevel,
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl RiskZone {
    /// Whether the closed segment `a`–`b` meets the closed rectangle.
    pub fn intersects_segment(&self, a: [f64; 2], b: [f64; 2]) -> bool {
        // Liang–Barsky clipping against the four slabs.
        let d = [b[0] - a[0], b[1] - a[1]];
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        for (p, q) in [
            (-d[0], a[0] - self.x0),
            (d[0], self.x1 - a[0]),
            (-d[1], a[1] - self.y0),
            (d[1], self.y1 - a[1]),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return false;
                }
            } else {
                let r = q / p;
                if p < 0.0 {
                    t0 = t0.max(r);
                } else {
                    t1 = t1.min(r);
                }
                if t0 > t1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Occupancy grid with a clearance field and optional risk zones.
///
/// Cell `(r, c)` covers `[c·s, (c+1)·s] × [r·s, (r+1)·s]` for cell size `s`;
/// `x` grows along columns and `y` along rows (row 0 is the first text row).
#[derive(Clone, Debug)]
pub struct GridEnvironment {
    rows: usize,
    cols: usize,
    cell_size: f64,
    obstacle: Vec<bool>,
    clearance: Vec<f64>,
    zones: Vec<RiskZone>,
}

impl GridEnvironment {
    /// Builds an environment from an occupancy mask (row-major, `true` = obstacle).
    pub fn new(rows: usize, cols: usize, cell_size: f64, obstacle: Vec<bool>, zones: Vec<RiskZone>) -> Result<Self> {
        if rows == 0 || cols == 0 || obstacle.len() != rows * cols {
            return Err(Error::Environment(format!(
                "occupancy mask of {} cells does not match a {rows}×{cols} grid",
                obstacle.len()
            )));
        }
        if !(cell_size > 0.0 && cell_size.is_finite()) {
            return Err(Error::Environment(format!("cell size must be positive, got {cell_size}")));
        }
        let (w, h) = (cols as f64 * cell_size, rows as f64 * cell_size);
        for z in &zones {
            let inside = 0.0 <= z.x0 && z.x0 <= z.x1 && z.x1 <= w && 0.0 <= z.y0 && z.y0 <= z.y1 && z.y1 <= h;
            if !inside {
                return Err(Error::Environment(format!(
                    "risk zone ({}, {}, {}, {}) is not a rectangle inside the {w}×{h} map",
                    z.x0, z.y0, z.x1, z.y1
                )));
            }
        }
        let clearance = clearance_field(rows, cols, &obstacle)
            .into_iter()
            .map(|d| d * cell_size)
            .collect();
        Ok(Self { rows, cols, cell_size, obstacle, clearance, zones })
    }

    pub fn read(path: impl AsRef<FsPath>) -> Result<Self> {
        load_grid(&std::fs::read_to_string(path)?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn width(&self) -> f64 {
        self.cols as f64 * self.cell_size
    }

    pub fn height(&self) -> f64 {
        self.rows as f64 * self.cell_size
    }

    pub fn risk_zones(&self) -> &[RiskZone] {
        &self.zones
    }

    pub fn is_obstacle(&self, r: usize, c: usize) -> bool {
        self.obstacle[r * self.cols + c]
    }

    pub fn free_cell_count(&self) -> usize {
        self.obstacle.iter().filter(|o| !**o).count()
    }

    /// Distance (length units) from the centre of cell `(r, c)` to the
    /// centre of the nearest obstacle cell.
    pub fn cell_clearance(&self, r: usize, c: usize) -> f64 {
        self.clearance[r * self.cols + c]
    }

    pub fn in_bounds(&self, p: [f64; 2]) -> bool {
        p[0].is_finite() && p[1].is_finite() && (0.0..=self.width()).contains(&p[0]) && (0.0..=self.height()).contains(&p[1])
    }

    /// Cell containing `p`; points on the far boundary belong to the last cell.
    pub fn cell_of(&self, p: [f64; 2]) -> Option<(usize, usize)> {
        if !self.in_bounds(p) {
            return None;
        }
        let c = ((p[0] / self.cell_size) as usize).min(self.cols - 1);
        let r = ((p[1] / self.cell_size) as usize).min(self.rows - 1);
        Some((r, c))
    }

    pub fn is_free(&self, p: [f64; 2]) -> bool {
        self.cell_of(p).is_some_and(|(r, c)| !self.is_obstacle(r, c))
    }

    /// Clearance of the cell containing `p`.
    pub fn clearance_at(&self, p: [f64; 2]) -> Option<f64> {
        self.cell_of(p).map(|(r, c)| self.cell_clearance(r, c))
    }

    /// Highest-risk zone level touched by the segment, if any.
    pub fn max_risk_level(&self, a: [f64; 2], b: [f64; 2]) -> Option<RiskLevel> {
        self.zones
            .iter()
            .filter(|z| z.intersects_segment(a, b))
            .map(|z| z.level)
            .max_by_key(|l| *l as u8)
    }

    /// Renders the environment back to the text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.cell_size != 1.0 {
            out.push_str(&format!("cell_size {}\n", self.cell_size));
        }
        for z in &self.zones {
            out.push_str(&format!("risk {} {} {} {} {}\n", z.level, z.x0, z.y0, z.x1, z.y1));
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.is_obstacle(r, c) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the ASCII map format.
///
/// Header lines `cell_size <s>` and `risk <low|medium|high> x0 y0 x1 y1`
/// may precede the grid; blank lines and lines starting with `;` are
/// ignored. Grid rows use `.` for free and `#` for obstacle cells.
pub fn load_grid(text: &str) -> Result<GridEnvironment> {
    let mut cell_size = 1.0;
    let mut zones = Vec::new();
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.starts_with(';') {
            continue;
        }
        let perr = |message: String| Error::Parse { line: line_no, message };
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap_or_default();
        match first {
            "cell_size" | "risk" if !rows.is_empty() => {
                return Err(perr(format!("`{first}` header after the grid started")));
            }
            "cell_size" => {
                cell_size = tokens
                    .next()
                    .and_then(|t| t.parse::<f64>().ok())
                    .filter(|s| *s > 0.0 && s.is_finite())
                    .ok_or_else(|| perr("cell_size needs one positive number".into()))?;
            }
            "risk" => {
                let level: RiskLevel = tokens
                    .next()
                    .ok_or_else(|| perr("risk line needs a level".into()))?
                    .parse()
                    .map_err(|e: Error| perr(e.to_string()))?;
                let nums: Vec<f64> = tokens
                    .map(|t| t.parse::<f64>().map_err(|_| perr(format!("bad number `{t}`"))))
                    .collect::<Result<_>>()?;
                let [x0, y0, x1, y1] = nums[..] else {
                    return Err(perr("risk line needs four coordinates".into()));
                };
                zones.push(RiskZone { level, x0: x0.min(x1), y0: y0.min(y1), x1: x0.max(x1), y1: y0.max(y1) });
            }
            _ => {
                let row = line
                    .chars()
                    .map(|ch| match ch {
                        '.' => Ok(false),
                        '#' => Ok(true),
                        other => Err(perr(format!("unexpected character `{other}` in grid row"))),
                    })
                    .collect::<Result<Vec<bool>>>()?;
                if let Some(first_row) = rows.first() {
                    if first_row.len() != row.len() {
                        return Err(perr(format!(
                            "ragged grid: row has {} cells, expected {}",
                            row.len(),
                            first_row.len()
                        )));
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse { line: text.lines().count(), message: "map contains no grid rows".into() });
    }
    let (n_rows, n_cols) = (rows.len(), rows[0].len());
    GridEnvironment::new(n_rows, n_cols, cell_size, rows.concat(), zones)
}

/// Squared 1-D distance transform (lower envelope of parabolas).
fn edt_1d(f: &[f64], d: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0;
    v[0] = 0;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    for q in 1..n {
        if f[q].is_infinite() {
            continue;
        }
        if f[v[0]].is_infinite() {
            v[0] = q;
            continue;
        }
        loop {
            let p = v[k];
            let s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q as f64 - p as f64));
            // z[0] is -inf, so this never pops past the first parabola.
            if s <= z[k] {
                k -= 1;
                continue;
            }
            k += 1;
            v[k] = q;
            z[k] = s;
            z[k + 1] = f64::INFINITY;
            break;
        }
    }
    if f[v[0]].is_infinite() {
        d.fill(f64::INFINITY);
        return;
    }
    let mut k = 0;
    for (q, dq) in d.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let p = v[k];
        let diff = q as f64 - p as f64;
        *dq = diff * diff + f[p];
    }
}

/// Exact Euclidean distance (cell units, centre to centre) from every cell
/// to the nearest obstacle cell. Without obstacles, the distance from each
/// cell centre to the grid boundary is used instead.
pub(crate) fn clearance_field(rows: usize, cols: usize, obstacle: &[bool]) -> Vec<f64> {
    if !obstacle.iter().any(|o| *o) {
        let mut out = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let (x, y) = (c as f64 + 0.5, r as f64 + 0.5);
                out.push(x.min(cols as f64 - x).min(y).min(rows as f64 - y));
            }
        }
        return out;
    }
    let n = rows.max(cols);
    let (mut f, mut d) = (vec![0.0; n], vec![0.0; n]);
    let (mut v, mut z) = (vec![0usize; n], vec![0.0; n + 1]);
    let mut grid: Vec<f64> = obstacle.iter().map(|&o| if o { 0.0 } else { f64::INFINITY }).collect();
    for c in 0..cols {
        for r in 0..rows {
            f[r] = grid[r * cols + c];
        }
        edt_1d(&f[..rows], &mut d[..rows], &mut v, &mut z);
        for r in 0..rows {
            grid[r * cols + c] = d[r];
        }
    }
    for r in 0..rows {
        f[..cols].copy_from_slice(&grid[r * cols..(r + 1) * cols]);
        edt_1d(&f[..cols], &mut d[..cols], &mut v, &mut z);
        grid[r * cols..(r + 1) * cols].copy_from_slice(&d[..cols]);
    }
    grid.into_iter().map(f64::sqrt).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_clearance() {
        let env = load_grid(".#.\n").unwrap();
        let c: Vec<f64> = (0..3).map(|i| env.cell_clearance(0, i)).collect();
        assert_eq!(c, vec![1.0, 0.0, 1.0]);
    }

    #[test]
    fn all_free_uses_boundary_distance() {
        let env = load_grid("....\n....\n....\n").unwrap();
        assert_eq!(env.cell_clearance(0, 0), 0.5);
        assert_eq!(env.cell_clearance(1, 1), 1.5);
        assert_eq!(env.cell_clearance(1, 3), 0.5);
    }

    #[test]
    fn edt_matches_brute_force_on_small_grid() {
        let text = "#.....\n......\n...#..\n......\n.....#\n";
        let env = load_grid(text).unwrap();
        let obstacles: Vec<(usize, usize)> = (0..env.rows())
            .flat_map(|r| (0..env.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| env.is_obstacle(r, c))
            .collect();
        for r in 0..env.rows() {
            for c in 0..env.cols() {
                let brute = obstacles
                    .iter()
                    .map(|&(a, b)| ((a as f64 - r as f64).powi(2) + (b as f64 - c as f64).powi(2)).sqrt())
                    .fold(f64::INFINITY, f64::min);
                assert!((env.cell_clearance(r, c) - brute).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn headers_and_cell_size() {
        let env = load_grid("cell_size 0.5\nrisk high 0 0 1 0.5\n; comment\n..\n.#\n").unwrap();
        assert_eq!(env.cell_size(), 0.5);
        assert_eq!(env.width(), 1.0);
        assert_eq!(env.risk_zones().len(), 1);
        assert_eq!(env.cell_clearance(0, 0), 0.5 * 2f64.sqrt());
        let back = load_grid(&env.to_text()).unwrap();
        assert_eq!(back.to_text(), env.to_text());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(load_grid("..\n...\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(load_grid(".x.\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load_grid("risk extreme 0 0 1 1\n..\n"), Err(Error::Parse { .. })));
        assert!(matches!(load_grid("risk low 0 0 1\n..\n"), Err(Error::Parse { .. })));
        assert!(load_grid("\n\n").is_err());
        assert!(load_grid("risk low 0 0 5 5\n..\n").is_err());
    }

    #[test]
    fn segment_zone_intersection() {
        let z = RiskZone { level: RiskLevel::Low, x0: 1.0, y0: 1.0, x1: 2.0, y1: 2.0 };
        assert!(z.intersects_segment([0.0, 0.0], [3.0, 3.0]));
        assert!(z.intersects_segment([1.5, 1.5], [1.6, 1.6]));
        assert!(!z.intersects_segment([0.0, 0.0], [3.0, 0.5]));
        assert!(!z.intersects_segment([0.0, 3.0], [0.9, 0.0]));
        assert!(!z.intersects_segment([0.0, 1.0], [0.5, 1.0]));
        assert!(z.intersects_segment([2.0, 0.0], [2.0, 3.0]));
    }
}
