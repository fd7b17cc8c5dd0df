//! Gamma function and the unit-ball volume coefficient.

use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function on the reals, accurate to roughly 15 significant digits
/// away from the poles.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: Γ(x) Γ(1 - x) = π / sin(πx)
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut acc = LANCZOS_COEFFS[0];
        for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// Volume of the unit ball in "dimension" `x`: `π^(x/2) / Γ(x/2 + 1)`.
///
/// Defined for any real `x >= 0`; used to normalise Minkowski contents at
/// fractional codimensions.
pub fn gamma_coeff(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::invalid(
            "x",
            format!("ball coefficient needs x >= 0, got {x}"),
        ));
    }
    Ok(PI.powf(x / 2.0) / gamma(x / 2.0 + 1.0))
}
