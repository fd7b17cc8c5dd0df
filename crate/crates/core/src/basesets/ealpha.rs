use std::f64::consts::{FRAC_PI_4, PI};

use super::gamma::gamma;
use crate::error::{Error, Result};
use crate::nests::split_indices;

/// Finite resolution-`eps` representation of `E_alpha = {k^-alpha}`.
///
/// Returns the tail points `k^-alpha` for `k <= m1` followed by the core
/// points `2 k eps` for `k <= m2`, in descending order. All points lie in
/// `(0, 1]`.
pub fn e_alpha_points(alpha: f64, eps: f64) -> Result<Vec<f64>> {
    if !(eps < 1.0) {
        return Err(Error::invalid("eps", format!("must be below 1, got {eps}")));
    }
    e_alpha_points_unchecked(alpha, eps)
}

/// Same as [`e_alpha_points`] but also accepts `eps >= 1`, where the set
/// collapses to the single point 1.
pub(crate) fn e_alpha_points_unchecked(alpha: f64, eps: f64) -> Result<Vec<f64>> {
    let split = split_indices(alpha, eps)?;
    let clamp = split.core_clamp();
    let len = usize::try_from(split.m1 + split.m2)
        .map_err(|_| Error::ResourceLimit("point count exceeds usize".into()))?;
    let mut points = Vec::with_capacity(len);
    points.extend((1..=split.m1).map(|k| (k as f64).powf(-alpha)));
    // the top core point can overshoot 1 only when the tail is empty
    points.extend(
        (1..=split.m2)
            .rev()
            .map(|k| (2.0 * k as f64 * eps).min(clamp)),
    );
    Ok(points)
}

/// Angles of the finite representation of `D_beta` on the unit circle:
/// `(pi/4)(1 - x)` and `(pi/4)(1 + x)` for every `x` of `E_beta`.
///
/// `eps_rel` is the resolution on the parameter interval.
pub fn d_beta_angles(beta: f64, eps_rel: f64) -> Result<Vec<f64>> {
    if !(eps_rel < 1.0) {
        return Err(Error::invalid(
            "eps_rel",
            format!("must be below 1, got {eps_rel}"),
        ));
    }
    d_beta_angles_unchecked(beta, eps_rel)
}

pub(crate) fn d_beta_angles_unchecked(beta: f64, eps_rel: f64) -> Result<Vec<f64>> {
    let xs = e_alpha_points_unchecked(beta, eps_rel)?;
    let mut angles = Vec::with_capacity(2 * xs.len());
    angles.extend(xs.iter().map(|x| FRAC_PI_4 * (1.0 - x)));
    angles.extend(xs.iter().map(|x| FRAC_PI_4 * (1.0 + x)));
    Ok(angles)
}

/// Normalised Minkowski content of `E_alpha` at its dimension `1/(1+alpha)`.
pub fn e_alpha_content(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::invalid(
            "alpha",
            format!("must be positive, got {alpha}"),
        ));
    }
    let base = 2.0 / (alpha * PI.sqrt());
    let g = gamma(alpha / (2.0 * (alpha + 1.0)) + 1.0);
    Ok(base.powf(alpha / (alpha + 1.0)) * (alpha + 1.0) * g)
}
