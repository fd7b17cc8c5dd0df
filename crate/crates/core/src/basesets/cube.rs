use super::gamma::gamma_coeff;
use crate::error::{Error, Result};

/// Number of `k`-dimensional faces of the `m`-cube: `2^(m-k) * C(m, k)`.
pub fn cube_edge_count(m: u32, k: u32) -> u64 {
    if k > m {
        return 0;
    }
    let mut binom: u64 = 1;
    for i in 0..k as u64 {
        binom = binom * (m as u64 - i) / (i + 1);
    }
    binom << (m - k)
}

/// Area (volume) of the `eps`-sausage of the unit `m`-cube sitting in `R^n`.
pub fn cube_sausage_volume(m: u32, n: u32, eps: f64) -> Result<f64> {
    if m > n {
        return Err(Error::invalid(
            "m",
            format!("cube dimension {m} exceeds ambient {n}"),
        ));
    }
    if !(eps > 0.0) {
        return Err(Error::invalid(
            "eps",
            format!("must be positive, got {eps}"),
        ));
    }
    let mut ratio = gamma_coeff((n - m) as f64)?;
    for k in 0..m {
        let faces = cube_edge_count(m, k) as f64;
        ratio += gamma_coeff((n - k) as f64)? * (eps / 2.0).powi((m - k) as i32) * faces;
    }
    Ok(ratio * eps.powi((n - m) as i32))
}
