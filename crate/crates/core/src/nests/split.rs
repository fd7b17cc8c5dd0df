//! Tail/core split of the sequence `k^-alpha` at resolution `eps`.
//!
//! The first `m1` terms are separated from their successor by at least
//! `2 eps` and are kept individually (the tail). Everything below
//! `(m1 + 1)^-alpha` is replaced by `m2` points spaced `2 eps` apart (the
//! core).

use crate::error::{Error, Result};

/// Largest index we are prepared to hand out: every integer up to 2^53
/// round-trips through `f64`.
pub const MAX_INDEX: u64 = 1 << 53;

// Relative slack for the `gap >= 2 eps` and ceiling comparisons. Exact
// rational boundary cases (e.g. alpha = 1, eps = 1/40) otherwise flip on
// the last bit of the subtraction.
const BOUNDARY_SLACK: f64 = 1e-12;

/// The pair `(m1, m2)` for a given `(alpha, eps)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitIndices {
    pub m1: u64,
    pub m2: u64,
    pub eps: f64,
    pub alpha: f64,
}

impl SplitIndices {
    /// `(m1 + 1)^-alpha`, the bottom of the tail. Equal to 1 when the tail
    /// is empty.
    pub fn core_cap(&self) -> f64 {
        if self.m1 == 0 {
            1.0
        } else {
            ((self.m1 + 1) as f64).powf(-self.alpha)
        }
    }

    /// Upper clamp for core offsets `2 k eps`. With an empty tail the top core
    /// point would overshoot 1 and is pulled back onto it; otherwise
    /// `2 m2 eps <= m1^-alpha` already holds.
    pub(crate) fn core_clamp(&self) -> f64 {
        if self.m1 == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    }
}

/// `m^-alpha - (m + 1)^-alpha`, computed without cancellation.
pub(crate) fn successive_gap(alpha: f64, m: f64) -> f64 {
    m.powf(-alpha) * -(-alpha * (1.0 / m).ln_1p()).exp_m1()
}

/// Computes the tail length `m1` and core size `m2` for `k^-alpha` at
/// resolution `eps`.
///
/// `m1` is the largest `m >= 1` with `m^-alpha - (m+1)^-alpha >= 2 eps`, or 0
/// when even the first gap is narrower. `m2 = ceil((m1+1)^-alpha / (2 eps))`.
pub fn split_indices(alpha: f64, eps: f64) -> Result<SplitIndices> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::invalid(
            "alpha",
            format!("must be positive, got {alpha}"),
        ));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::invalid(
            "eps",
            format!("must be positive, got {eps}"),
        ));
    }
    let two_eps = 2.0 * eps;
    let wide = |m: u64| successive_gap(alpha, m as f64) >= two_eps * (1.0 - BOUNDARY_SLACK);

    let m1 = if !wide(1) {
        0
    } else {
        // the gap equals alpha * xi^-(alpha+1) for some xi in (m, m+1), so
        // m1 sits next to xi* = (alpha / 2 eps)^(1/(alpha+1))
        let guess = (alpha / two_eps).powf(1.0 / (alpha + 1.0)).floor();
        if !(guess < MAX_INDEX as f64) {
            return Err(overflow(alpha, eps));
        }
        let mut m = (guess as u64).max(1);
        while m > 1 && !wide(m) {
            m -= 1;
        }
        while wide(m + 1) {
            m += 1;
            if m >= MAX_INDEX {
                return Err(overflow(alpha, eps));
            }
        }
        m
    };

    let cap = if m1 == 0 {
        1.0
    } else {
        ((m1 + 1) as f64).powf(-alpha)
    };
    let ratio = cap / two_eps;
    if ratio >= MAX_INDEX as f64 {
        return Err(overflow(alpha, eps));
    }
    let m2 = ((ratio * (1.0 - BOUNDARY_SLACK)).ceil() as u64).max(1);

    Ok(SplitIndices { m1, m2, eps, alpha })
}

fn overflow(alpha: f64, eps: f64) -> Error {
    Error::ResourceLimit(format!(
        "split indices for alpha = {alpha}, eps = {eps:e} exceed {MAX_INDEX}"
    ))
}
