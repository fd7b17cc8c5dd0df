use super::CountSeries;
use crate::error::{Error, Result};

/// Outcome of fitting `ln N_eps = slope * (-ln eps) + intercept`.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    /// Estimated box dimension.
    pub slope: f64,
    pub intercept: f64,
    /// `ln N - fitted`, in row order.
    pub residuals: Vec<f64>,
    pub theory_value: Option<f64>,
    pub relative_error: Option<f64>,
}

impl EstimateReport {
    /// Attaches a theoretical dimension and the matching relative error.
    pub fn with_theory(mut self, theory: f64) -> Self {
        self.relative_error = Some(relative_error(&self, theory));
        self.theory_value = Some(theory);
        self
    }

    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

/// Ordinary least squares of `ln count` on `-ln eps`.
pub fn regression_dimension(series: &CountSeries) -> Result<EstimateReport> {
    let rows = series.rows();
    if rows.len() < 3 {
        return Err(Error::DegenerateRegression(format!(
            "need at least 3 rows, got {}",
            rows.len()
        )));
    }
    let xs: Vec<f64> = rows.iter().map(|r| -r.eps.ln()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| (r.count as f64).ln()).collect();
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    if !(sxx > 1e-12 * n) {
        return Err(Error::DegenerateRegression("no spread in -ln eps".into()));
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residuals = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (slope * x + intercept))
        .collect();
    Ok(EstimateReport {
        slope,
        intercept,
        residuals,
        theory_value: None,
        relative_error: None,
    })
}

/// `|slope - theory| / theory`.
pub fn relative_error(report: &EstimateReport, theory: f64) -> f64 {
    (report.slope - theory).abs() / theory
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcount::{epsilon_schedule, CountRow, CounterKind};

    fn series(eps: &[f64], count: impl Fn(f64) -> u64) -> CountSeries {
        let rows = eps
            .iter()
            .map(|&e| CountRow {
                eps: e,
                count: count(e),
            })
            .collect();
        CountSeries::new(rows, CounterKind::Primitive).unwrap()
    }

    #[test]
    fn segment_counts() {
        let eps = epsilon_schedule((-10f64).exp2(), (-20f64).exp2(), 11).unwrap();
        let r = regression_dimension(&series(&eps, |e| (1.0 / e).ceil() as u64)).unwrap();
        assert!((r.slope - 1.0).abs() < 0.01);
    }

    #[test]
    fn exact_power_law() {
        let eps = epsilon_schedule((-4f64).exp2(), (-36f64).exp2(), 9).unwrap();
        // 2^(0.75 j) is an integer count when j is a multiple of 4
        let rows: Vec<_> = eps
            .iter()
            .map(|&e| CountRow {
                eps: e,
                count: (3.0 * e.powf(-0.75)).round() as u64,
            })
            .collect();
        let s = CountSeries::new(rows, CounterKind::Grid).unwrap();
        let r = regression_dimension(&s).unwrap();
        assert!((r.slope - 0.75).abs() < 1e-10, "{}", r.slope);
        assert!(r.residuals.iter().all(|x| x.abs() < 1e-10));
        assert_eq!(r.residuals.len(), 9);
    }

    #[test]
    fn too_few_rows() {
        let s = series(&[0.1, 0.01], |e| (1.0 / e) as u64);
        assert!(matches!(
            regression_dimension(&s),
            Err(Error::DegenerateRegression(_))
        ));
    }

    #[test]
    fn relative_error_values() {
        let mk = |slope| EstimateReport {
            slope,
            intercept: 0.0,
            residuals: vec![],
            theory_value: None,
            relative_error: None,
        };
        assert_eq!(relative_error(&mk(0.75), 0.75), 0.0);
        assert!((relative_error(&mk(0.82), 0.75) - 0.07 / 0.75).abs() < 1e-12);
        assert!((relative_error(&mk(0.7), 0.75) - relative_error(&mk(0.8), 0.75)).abs() < 1e-12);
        assert_eq!(mk(0.82).with_theory(0.75).theory_value, Some(0.75));
    }
}
