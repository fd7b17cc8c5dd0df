//! Closed-form box dimensions of nests and the parameter synthesis used by
//! the fixed- and varying-dimension experiments.

use crate::basesets::{check_cantor, gamma_coeff};
use crate::error::{Error, Result};
use crate::nests::NestKind;

/// Relative tolerance for deciding `alpha * delta == 1`.
pub const CRITICAL_TOLERANCE: f64 = 1e-12;

/// Which part of a nest carries its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Centre nest with `alpha * delta > 1`: the base set dominates.
    TailDominant,
    /// Centre nest with `alpha * delta < 1`: the accumulating rings dominate.
    CoreDominant,
    /// Centre nest with `alpha * delta = 1`; Minkowski content degenerates.
    Critical,
    /// Outer nests have a single regime.
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionResult {
    pub value: f64,
    /// Whether upper and lower Minkowski contents are finite and positive.
    pub nondegenerate: bool,
    pub regime: Regime,
}

/// Box dimension of the `alpha`-regular nest over a base of dimension
/// `delta` on the unit circle.
pub fn nest_dimension(kind: NestKind, alpha: f64, delta: f64) -> Result<DimensionResult> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::invalid(
            "alpha",
            format!("must be positive, got {alpha}"),
        ));
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::invalid(
            "delta",
            format!("base dimension must lie in [0, 1], got {delta}"),
        ));
    }
    let result = match kind {
        NestKind::Outer => DimensionResult {
            value: delta + 1.0 / (alpha + 1.0),
            nondegenerate: true,
            regime: Regime::Outer,
        },
        NestKind::Centre => {
            let product = alpha * delta;
            if (product - 1.0).abs() <= CRITICAL_TOLERANCE {
                DimensionResult {
                    value: delta,
                    nondegenerate: false,
                    regime: Regime::Critical,
                }
            } else if product < 1.0 {
                DimensionResult {
                    value: (delta + 1.0) / (alpha + 1.0),
                    nondegenerate: true,
                    regime: Regime::CoreDominant,
                }
            } else {
                DimensionResult {
                    value: delta,
                    nondegenerate: true,
                    regime: Regime::TailDominant,
                }
            }
        }
    };
    Ok(result)
}

/// Dimension of the `(alpha, beta)`-bi-fractal `F_alpha D_beta`, valid while
/// `alpha / (1 + beta) < 1`.
pub fn bifractal_dimension(alpha: f64, beta: f64) -> f64 {
    (beta + 2.0) / ((beta + 1.0) * (alpha + 1.0))
}

/// Dimension of the centre or outer nest over the uniform Cantor set `C_N^r`.
pub fn cantor_nest_dimension(kind: NestKind, alpha: f64, n: u32, r: f64) -> Result<f64> {
    check_cantor(n, r)?;
    if !(alpha > 0.0) {
        return Err(Error::invalid(
            "alpha",
            format!("must be positive, got {alpha}"),
        ));
    }
    let log_r_n = (n as f64).ln() / r.ln();
    Ok(match kind {
        NestKind::Centre => (1.0 - log_r_n) / (1.0 + alpha),
        NestKind::Outer => 1.0 / (1.0 + alpha) - log_r_n,
    })
}

/// Nest over the full unit sphere `S^(n-1)` in `R^n`.
pub fn hypersphere_nest_dimension(n: u32, alpha: f64, kind: NestKind) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid(
            "n",
            format!("ambient dimension must be >= 2, got {n}"),
        ));
    }
    let n = n as f64;
    Ok(match kind {
        NestKind::Centre => (n - 1.0).max(n / (alpha + 1.0)),
        NestKind::Outer => n - alpha / (alpha + 1.0),
    })
}

/// Base-set parameters that give a centre nest of dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisedParams {
    pub d: f64,
    pub alpha: f64,
    pub delta: f64,
    /// `D_beta` exponent with dimension `delta`.
    pub beta: f64,
    /// `C_N^r` ratio with dimension `delta`.
    pub r: f64,
    pub n: u32,
}

/// The open interval of `alpha` for which `alpha` influences a target
/// dimension `d`: `(1/d - 1, 1/d)`.
pub fn alpha_interval(d: f64) -> (f64, f64) {
    (1.0 / d - 1.0, 1.0 / d)
}

/// Solves for `delta`, `beta` and `r` so that the centre nest with exponent
/// `alpha` over `D_beta` (or `C_N^r`) has dimension `d`.
pub fn solve_parameters(d: f64, alpha: f64, n: u32) -> Result<SynthesisedParams> {
    if !(d > 0.0 && d <= 1.0) {
        return Err(Error::invalid(
            "d",
            format!("target dimension must lie in (0, 1], got {d}"),
        ));
    }
    if n < 2 {
        return Err(Error::invalid(
            "N",
            format!("Cantor sets need N >= 2, got {n}"),
        ));
    }
    let (lo, hi) = alpha_interval(d);
    let delta = d * alpha + d - 1.0;
    // the delta bounds catch rounding right at the interval ends
    if !(alpha > lo && alpha < hi) || !(delta > 0.0 && alpha * delta < 1.0) {
        return Err(Error::AlphaOutOfRange { alpha, d, lo, hi });
    }
    let params = params_for_delta(d, alpha, delta, n);
    if !(params.r > 0.0) {
        return Err(Error::invalid(
            "alpha",
            format!("delta = {delta:e} is too small: the Cantor ratio {n}^(-1/delta) underflows"),
        ));
    }
    Ok(params)
}

/// Parameters for a base of dimension `delta`, without checking that the
/// resulting nest actually has dimension `d`.
pub(crate) fn params_for_delta(d: f64, alpha: f64, delta: f64, n: u32) -> SynthesisedParams {
    SynthesisedParams {
        d,
        alpha,
        delta,
        beta: 1.0 / delta - 1.0,
        r: (n as f64).powf(-1.0 / delta),
        n,
    }
}

/// The exponent in the middle of [`alpha_interval`]: `1/d - 1/2`.
pub fn centered_alpha(d: f64) -> f64 {
    1.0 / d - 0.5
}

/// `A^{n,delta}_eps = volume / (gamma_{n-delta} eps^(n-delta))`.
pub fn normalized_content_ratio(sausage_volume: f64, n: u32, delta: f64, eps: f64) -> Result<f64> {
    let n = n as f64;
    if !(0.0..=n).contains(&delta) {
        return Err(Error::invalid(
            "delta",
            format!("must lie in [0, {n}], got {delta}"),
        ));
    }
    if !(eps > 0.0) {
        return Err(Error::invalid(
            "eps",
            format!("must be positive, got {eps}"),
        ));
    }
    Ok(sausage_volume / (gamma_coeff(n - delta)? * eps.powf(n - delta)))
}
