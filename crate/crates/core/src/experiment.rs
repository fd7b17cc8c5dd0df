//! Estimation pipeline and parameter sweeps.
//!
//! An estimate counts `N_eps` over an `eps` schedule with either counter
//! and fits the log-log slope. A sweep synthesises nest parameters for a
//! grid of exponents or target dimensions and estimates each point for the
//! bi-fractal and uniform-Cantor families.

use std::fmt;

use rayon::prelude::*;

use crate::basesets::BaseSetSpec;
use crate::boxcount::{
    grid_count, regression_dimension, CountRow, CountSeries, CounterKind, EstimateReport,
};
use crate::error::{Error, Result};
use crate::nests::{generate_scene, primitive_count, NestKind, NestSpec};
use crate::theory::{
    alpha_interval, centered_alpha, nest_dimension, params_for_delta, solve_parameters,
    SynthesisedParams,
};

/// Counts `N_eps` for one resolution.
pub fn count_at(spec: &NestSpec, eps: f64, counter: CounterKind) -> Result<u64> {
    match counter {
        CounterKind::Primitive => primitive_count(spec, eps),
        CounterKind::Grid => grid_count(&generate_scene(spec, eps)?, eps),
    }
}

/// Counts over a strictly decreasing schedule. Resolutions are counted in
/// parallel; rows keep schedule order.
pub fn count_series(
    spec: &NestSpec,
    schedule: &[f64],
    counter: CounterKind,
) -> Result<CountSeries> {
    let rows = schedule
        .par_iter()
        .map(|&eps| count_at(spec, eps, counter).map(|count| CountRow { eps, count }))
        .collect::<Result<Vec<_>>>()?;
    CountSeries::new(rows, counter)
}

/// Theoretical box dimension of a nest whose base lies on the circle.
pub fn theory_dimension(spec: &NestSpec) -> Result<f64> {
    Ok(nest_dimension(spec.kind(), spec.alpha(), spec.base().delta())?.value)
}

/// Series plus fitted report.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub series: CountSeries,
    pub report: EstimateReport,
}

/// Counts, fits, and attaches the theoretical dimension when one exists.
pub fn estimate(spec: &NestSpec, schedule: &[f64], counter: CounterKind) -> Result<Estimate> {
    let series = count_series(spec, schedule, counter)?;
    let mut report = regression_dimension(&series)?;
    if let Ok(theory) = theory_dimension(spec) {
        report = report.with_theory(theory);
    }
    Ok(Estimate { series, report })
}

/// Base-set family used in the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Centre nest over `D_beta`.
    Bifractal,
    /// Centre nest over `C_N^r`.
    Cantor,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Bifractal => "bifractal",
            Family::Cantor => "cantor",
        })
    }
}

impl Family {
    /// Centre nest of this family built from synthesised parameters.
    pub fn nest(&self, params: &SynthesisedParams) -> Result<NestSpec> {
        let base = match self {
            Family::Bifractal => BaseSetSpec::d_beta(params.beta)?,
            Family::Cantor => BaseSetSpec::uniform_cantor(params.n, params.r)?,
        };
        NestSpec::new(NestKind::Centre, params.alpha, base)
    }

    /// `beta` for the bi-fractal family, `r` for the Cantor family.
    pub fn shape_parameter(&self, params: &SynthesisedParams) -> f64 {
        match self {
            Family::Bifractal => params.beta,
            Family::Cantor => params.r,
        }
    }
}

/// Parameters for a centre nest of dimension `d` with exponent `alpha`.
///
/// Inside the open interval `(1/d - 1, 1/d)` this is [`solve_parameters`].
/// With `force`, exponents at or above `1/d` are accepted too: the base
/// then carries the whole dimension (`delta = d`), which at `alpha = 1/d`
/// is the degenerate critical point.
pub fn synthesise(d: f64, alpha: f64, n: u32, force: bool) -> Result<SynthesisedParams> {
    match solve_parameters(d, alpha, n) {
        Err(Error::AlphaOutOfRange { hi, .. }) if force && alpha >= hi && d < 1.0 => {
            Ok(params_for_delta(d, alpha, d, n))
        }
        other => other,
    }
}

/// Grid of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepGrid {
    /// Fixed target dimension, varying exponent.
    FixedDimension { d: f64, alphas: Vec<f64> },
    /// Varying target dimension with the centred exponent `1/d - 1/2`.
    VaryingDimension { dims: Vec<f64> },
}

impl SweepGrid {
    /// `(d, alpha)` pairs in grid order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        match self {
            SweepGrid::FixedDimension { d, alphas } => alphas.iter().map(|&a| (*d, a)).collect(),
            SweepGrid::VaryingDimension { dims } => {
                dims.iter().map(|&d| (d, centered_alpha(d))).collect()
            }
        }
    }
}

/// `count` evenly spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![lo],
        _ => (0..count)
            .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub family: Family,
    pub d_target: f64,
    pub alpha: f64,
    pub shape_parameter: f64,
    pub slope: f64,
    pub relative_error: f64,
    pub max_abs_residual: f64,
}

/// A grid point that could not be synthesised.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedPoint {
    pub d_target: f64,
    pub alpha: f64,
    pub reason: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    /// Rows ordered by grid index, then family.
    pub points: Vec<SweepPoint>,
    pub skipped: Vec<SkippedPoint>,
}

/// Sweep settings shared by every grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub grid: SweepGrid,
    pub families: Vec<Family>,
    pub cantor_n: u32,
    pub schedule: Vec<f64>,
    pub counter: CounterKind,
    pub force: bool,
}

/// Runs every `(grid point, family)` pair; grid points run in parallel.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    let grid = config.grid.points();
    let results: Vec<std::result::Result<Vec<SweepPoint>, SkippedPoint>> = grid
        .par_iter()
        .map(|&(d, alpha)| {
            let params = match synthesise(d, alpha, config.cantor_n, config.force) {
                Ok(p) => p,
                Err(reason) => {
                    return Ok(Err(SkippedPoint {
                        d_target: d,
                        alpha,
                        reason,
                    }))
                }
            };
            let mut rows = Vec::with_capacity(config.families.len());
            for &family in &config.families {
                let spec = family.nest(&params)?;
                let series = count_series(&spec, &config.schedule, config.counter)?;
                let report = regression_dimension(&series)?.with_theory(d);
                rows.push(SweepPoint {
                    family,
                    d_target: d,
                    alpha,
                    shape_parameter: family.shape_parameter(&params),
                    slope: report.slope,
                    relative_error: report.relative_error.unwrap_or(f64::NAN),
                    max_abs_residual: report.max_abs_residual(),
                });
            }
            Ok(Ok(rows))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut outcome = SweepOutcome {
        points: Vec::new(),
        skipped: Vec::new(),
    };
    for r in results {
        match r {
            Ok(rows) => outcome.points.extend(rows),
            Err(s) => outcome.skipped.push(s),
        }
    }
    Ok(outcome)
}

/// Default exponent grid for a fixed-dimension sweep: `count` points
/// strictly inside `(1/d - 1, 1/d)`, trimmed by `margin_lo` and `margin_hi`.
pub fn fixed_dimension_alphas(d: f64, count: usize, margin_lo: f64, margin_hi: f64) -> Vec<f64> {
    let (lo, hi) = alpha_interval(d);
    linspace(lo + margin_lo, hi - margin_hi, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcount::epsilon_schedule;

    #[test]
    fn singleton_nest_slope() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        let schedule = epsilon_schedule((-10f64).exp2(), (-25f64).exp2(), 10).unwrap();
        let est = estimate(&spec, &schedule, CounterKind::Primitive).unwrap();
        assert!(est.report.relative_error.unwrap() < 0.1, "{:?}", est.report);
        assert_eq!(est.report.theory_value, Some(0.5));
    }

    #[test]
    fn synthesis_with_and_without_force() {
        assert!(synthesise(0.75, 4.0 / 3.0, 3, false).is_err());
        let p = synthesise(0.75, 4.0 / 3.0, 3, true).unwrap();
        assert!((p.delta - 0.75).abs() < 1e-12);
        let p = synthesise(0.75, 3.0, 3, true).unwrap();
        assert_eq!(p.delta, 0.75);
        assert!((p.beta - 1.0 / 3.0).abs() < 1e-12);
        // left of the interval the target dimension is unreachable
        assert!(synthesise(0.75, 0.2, 3, true).is_err());
    }

    #[test]
    fn sweep_skips_out_of_range_points() {
        let config = SweepConfig {
            grid: SweepGrid::FixedDimension {
                d: 0.75,
                alphas: vec![0.2, 1.0, 1.5],
            },
            families: vec![Family::Bifractal, Family::Cantor],
            cantor_n: 3,
            schedule: epsilon_schedule((-8f64).exp2(), (-12f64).exp2(), 4).unwrap(),
            counter: CounterKind::Primitive,
            force: false,
        };
        let out = run_sweep(&config).unwrap();
        assert_eq!(out.points.len(), 2);
        assert_eq!(out.skipped.len(), 2);
        assert_eq!(out.points[0].family, Family::Bifractal);
        assert_eq!(out.points[1].family, Family::Cantor);
    }

    #[test]
    fn linspace_endpoints() {
        assert_eq!(linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert_eq!(linspace(2.0, 3.0, 1), vec![2.0]);
    }
}
