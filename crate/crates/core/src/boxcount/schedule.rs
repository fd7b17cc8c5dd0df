use crate::error::{Error, Result};

/// `samples` geometrically spaced values from `eps_hi` down to `eps_lo`,
/// both endpoints included exactly.
pub fn epsilon_schedule(eps_hi: f64, eps_lo: f64, samples: usize) -> Result<Vec<f64>> {
    if !(eps_lo > 0.0 && eps_lo < eps_hi && eps_hi.is_finite()) {
        return Err(Error::invalid(
            "eps range",
            format!("need 0 < eps_lo < eps_hi, got [{eps_lo}, {eps_hi}]"),
        ));
    }
    if samples < 3 {
        return Err(Error::invalid(
            "samples",
            format!("need at least 3, got {samples}"),
        ));
    }
    let (top, bottom) = (eps_hi.log2(), eps_lo.log2());
    let last = samples - 1;
    let out = (0..samples)
        .map(|i| match i {
            0 => eps_hi,
            i if i == last => eps_lo,
            i => (top + (bottom - top) * i as f64 / last as f64).exp2(),
        })
        .collect();
    Ok(out)
}
