use crate::basesets::Interval;

/// Exact length of the `eps`-sausage of finitely many points and intervals
/// on the real line: the union of `[x - eps, x + eps]` and
/// `[lo - eps, hi + eps]`, measured by sort-and-merge.
pub fn sausage_measure_1d(points: &[f64], intervals: &[Interval], eps: f64) -> f64 {
    let mut spans: Vec<(f64, f64)> = points
        .iter()
        .map(|&x| (x - eps, x + eps))
        .chain(intervals.iter().map(|iv| (iv.lo() - eps, iv.hi() + eps)))
        .collect();
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut total = 0.0;
    let mut current: Option<(f64, f64)> = None;
    for (lo, hi) in spans {
        current = match current {
            Some((clo, chi)) if lo <= chi => Some((clo, chi.max(hi))),
            Some((clo, chi)) => {
                total += chi - clo;
                Some((lo, hi))
            }
            None => Some((lo, hi)),
        };
    }
    if let Some((lo, hi)) = current {
        total += hi - lo;
    }
    total
}
