//! CSV and summary-line output.
//!
//! Numbers are written with 6 significant digits in the style of C's `%g`,
//! so reruns produce byte-identical files.

use std::fmt::Write;

use crate::boxcount::EstimateReport;
use crate::experiment::{Estimate, SweepOutcome};

pub const ESTIMATE_HEADER: &str = "epsilon,count,neg_ln_eps,ln_count,residual";
pub const SWEEP_HEADER: &str = "family,d_target,alpha,beta_or_r,slope,rel_err";

/// `%g` with 6 significant digits.
///
/// ```
/// use nestdim::report::format_g;
/// assert_eq!(format_g(0.75), "0.75");
/// assert_eq!(format_g(1.0 / 3.0), "0.333333");
/// assert_eq!(format_g(2f64.powi(-20)), "9.53674e-07");
/// assert_eq!(format_g(1234567.0), "1.23457e+06");
/// ```
pub fn format_g(v: f64) -> String {
    const PRECISION: i32 = 6;
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    // rounding first decides the exponent, e.g. 999999.5 -> 1e+06
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Estimate CSV: one row per resolution with the fit residual.
pub fn estimate_csv(estimate: &Estimate) -> String {
    let mut out = String::new();
    writeln!(out, "{ESTIMATE_HEADER}").unwrap();
    for (row, res) in estimate
        .series
        .rows()
        .iter()
        .zip(&estimate.report.residuals)
    {
        writeln!(
            out,
            "{},{},{},{},{}",
            format_g(row.eps),
            row.count,
            format_g(-row.eps.ln()),
            format_g((row.count as f64).ln()),
            format_g(*res)
        )
        .unwrap();
    }
    out
}

/// `slope=<v> theory=<v> rel_err=<v>`; `NA` when no theory value applies.
pub fn summary_line(report: &EstimateReport) -> String {
    let opt = |v: Option<f64>| v.map(format_g).unwrap_or_else(|| "NA".into());
    format!(
        "slope={} theory={} rel_err={}",
        format_g(report.slope),
        opt(report.theory_value),
        opt(report.relative_error)
    )
}

/// Sweep CSV, rows in grid order.
pub fn sweep_csv(outcome: &SweepOutcome) -> String {
    let mut out = String::new();
    writeln!(out, "{SWEEP_HEADER}").unwrap();
    for p in &outcome.points {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            p.family,
            format_g(p.d_target),
            format_g(p.alpha),
            format_g(p.shape_parameter),
            format_g(p.slope),
            format_g(p.relative_error)
        )
        .unwrap();
    }
    out
}
