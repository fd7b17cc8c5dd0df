use std::collections::HashSet;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::nests::{Scene, Shape};

/// Default cap on distinct occupied cells in one count.
pub const DEFAULT_CELL_CAP: usize = 1 << 25;

/// Set of occupied cells of the `eps`-mesh anchored at the origin.
///
/// Curves are traversed exactly: every crossing with a grid line splits
/// the curve, and the cell of each piece is marked. Cells are half-open, `[i eps, (i+1) eps) x [j eps, (j+1) eps)`.
#[derive(Debug, Clone)]
pub struct OccupancyGrid {
    eps: f64,
    cap: usize,
    cells: HashSet<(i64, i64)>,
}

impl OccupancyGrid {
    pub fn new(eps: f64) -> Result<Self> {
        Self::with_cap(eps, DEFAULT_CELL_CAP)
    }

    pub fn with_cap(eps: f64, cap: usize) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::invalid(
                "eps",
                format!("must be positive, got {eps}"),
            ));
        }
        Ok(OccupancyGrid {
            eps,
            cap,
            cells: HashSet::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn cell(&self, x: f64, y: f64) -> (i64, i64) {
        ((x / self.eps).floor() as i64, (y / self.eps).floor() as i64)
    }

    fn insert(&mut self, cell: (i64, i64)) -> Result<()> {
        if self.cells.insert(cell) && self.cells.len() > self.cap {
            return Err(Error::CellCapExceeded { cap: self.cap });
        }
        Ok(())
    }

    pub fn mark_point(&mut self, x: f64, y: f64) -> Result<()> {
        let c = self.cell(x, y);
        self.insert(c)
    }

    /// Marks every cell crossed by the straight segment `from -> to`.
    pub fn mark_segment(&mut self, from: (f64, f64), to: (f64, f64)) -> Result<()> {
        let (dx, dy) = (to.0 - from.0, to.1 - from.1);
        let mut ts = vec![0.0, 1.0];
        for (start, delta) in [(from.0, dx), (from.1, dy)] {
            if delta != 0.0 {
                let (a, b) = (start.min(start + delta), start.max(start + delta));
                for i in line_range(a, b, self.eps) {
                    let t = (i as f64 * self.eps - start) / delta;
                    if t > 0.0 && t < 1.0 {
                        ts.push(t);
                    }
                }
            }
        }
        self.mark_pieces(ts, |t| (from.0 + t * dx, from.1 + t * dy))
    }

    /// Marks every cell crossed by the arc of radius `rho` from angle `lo`
    /// to `hi`.
    pub fn mark_arc(&mut self, rho: f64, lo: f64, hi: f64) -> Result<()> {
        let mut ts = vec![lo, hi];
        let (xmin, xmax, ymin, ymax) = arc_extent(rho, lo, hi);
        for i in line_range(xmin, xmax, self.eps) {
            let c = (i as f64 * self.eps / rho).clamp(-1.0, 1.0);
            let t = c.acos();
            push_wrapped(&mut ts, t, lo, hi);
            push_wrapped(&mut ts, -t, lo, hi);
        }
        for j in line_range(ymin, ymax, self.eps) {
            let s = (j as f64 * self.eps / rho).clamp(-1.0, 1.0);
            let t = s.asin();
            push_wrapped(&mut ts, t, lo, hi);
            push_wrapped(&mut ts, PI - t, lo, hi);
        }
        self.mark_pieces(ts, |t| (rho * t.cos(), rho * t.sin()))
    }

    // Marks the cell of each endpoint and of the midpoint of every piece
    // between consecutive grid-line crossings.
    fn mark_pieces(&mut self, mut ts: Vec<f64>, at: impl Fn(f64) -> (f64, f64)) -> Result<()> {
        ts.sort_by(f64::total_cmp);
        ts.dedup();
        let mut last = None;
        let mut visit = |grid: &mut Self, t: f64| -> Result<()> {
            let (x, y) = at(t);
            let c = grid.cell(x, y);
            if last != Some(c) {
                grid.insert(c)?;
                last = Some(c);
            }
            Ok(())
        };
        visit(self, ts[0])?;
        for w in ts.windows(2) {
            visit(self, 0.5 * (w[0] + w[1]))?;
            visit(self, w[1])?;
        }
        Ok(())
    }
}

// Indices of grid lines `i * eps` lying in `[a, b]`.
fn line_range(a: f64, b: f64, eps: f64) -> std::ops::RangeInclusive<i64> {
    ((a / eps).ceil() as i64)..=((b / eps).floor() as i64)
}

fn push_wrapped(ts: &mut Vec<f64>, t: f64, lo: f64, hi: f64) {
    let first = ((lo - t) / TAU).ceil() as i64;
    let last = ((hi - t) / TAU).floor() as i64;
    for k in first..=last {
        let v = t + k as f64 * TAU;
        if v > lo && v < hi {
            ts.push(v);
        }
    }
}

// Bounding box of an arc: endpoints plus any axis-extreme angles inside.
fn arc_extent(rho: f64, lo: f64, hi: f64) -> (f64, f64, f64, f64) {
    let mut xs = vec![lo.cos(), hi.cos()];
    let mut ys = vec![lo.sin(), hi.sin()];
    let first = (lo / FRAC_PI_2).ceil() as i64;
    let last = (hi / FRAC_PI_2).floor() as i64;
    for q in first..=last {
        match q.rem_euclid(4) {
            0 => xs.push(1.0),
            1 => ys.push(1.0),
            2 => xs.push(-1.0),
            _ => ys.push(-1.0),
        }
    }
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min) * rho;
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max) * rho;
    (min(&xs), max(&xs), min(&ys), max(&ys))
}

/// Number of `eps`-mesh cells met by the primitives of `scene`.
pub fn grid_count(scene: &Scene, eps: f64) -> Result<u64> {
    grid_count_capped(scene, eps, DEFAULT_CELL_CAP)
}

pub(crate) fn grid_count_capped(scene: &Scene, eps: f64, cap: usize) -> Result<u64> {
    if scene.is_empty() {
        return Err(Error::invalid("scene", "grid count of an empty scene"));
    }
    let mut grid = OccupancyGrid::with_cap(eps, cap)?;
    for p in scene.primitives() {
        let rho = p.ring_radius;
        match p.shape {
            Shape::Point { angle } => grid.mark_point(rho * angle.cos(), rho * angle.sin())?,
            Shape::Arc { lo, hi } => grid.mark_arc(rho, lo, hi)?,
        }
    }
    Ok(grid.len() as u64)
}
