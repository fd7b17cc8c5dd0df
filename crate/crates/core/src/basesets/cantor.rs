use super::gamma::gamma_coeff;
use super::{check_cantor, Interval};
use crate::error::{Error, Result};

// Upper bound on retained intervals in one call.
const MAX_SEGMENTS: usize = 1 << 26;

/// Number of subdivision levels kept at resolution `min_len`: the smallest
/// `L >= 1` such that subdividing a level-`L` interval would open gaps no
/// wider than `min_len`.
pub fn cantor_depth(n: u32, r: f64, min_len: f64) -> Result<u32> {
    check_cantor(n, r)?;
    if !(min_len > 0.0) {
        return Err(Error::invalid(
            "min_len",
            format!("must be positive, got {min_len}"),
        ));
    }
    let gap_ratio = (1.0 - n as f64 * r) / (n as f64 - 1.0);
    let mut depth = 1u32;
    let mut count = n as usize;
    let mut len = r;
    while len * gap_ratio > min_len {
        depth += 1;
        len *= r;
        count = count.saturating_mul(n as usize);
        if count > MAX_SEGMENTS {
            return Err(Error::ResourceLimit(format!(
                "Cantor construction C_{n}^{r} at min_len {min_len:e} exceeds {MAX_SEGMENTS} intervals"
            )));
        }
    }
    Ok(depth)
}

/// Intervals of the uniform Cantor construction on `[0, 1]`, refined until
/// the gaps the next subdivision would open are no wider than `min_len`.
///
/// The unit interval is always subdivided at least once, so the output
/// never degenerates to `[0, 1]` itself. Intervals are returned in
/// ascending order and are pairwise disjoint.
pub fn cantor_segments(n: u32, r: f64, min_len: f64) -> Result<Vec<Interval>> {
    let depth = cantor_depth(n, r, min_len)?;
    let gap_ratio = (1.0 - n as f64 * r) / (n as f64 - 1.0);

    let mut out = Vec::with_capacity((n as usize).pow(depth));
    // depth-first, pushing children in reverse so they pop in ascending order
    let mut stack = vec![(0.0f64, 1.0f64, 0u32)];
    while let Some((lo, hi, level)) = stack.pop() {
        if level == depth {
            out.push(Interval { lo, hi });
            continue;
        }
        let len = hi - lo;
        let piece = r * len;
        let step = piece + len * gap_ratio;
        for j in (0..n).rev() {
            let (a, b) = if j == n - 1 {
                (hi - piece, hi)
            } else {
                let a = lo + j as f64 * step;
                (a, a + piece)
            };
            stack.push((a, b, level + 1));
        }
    }
    Ok(out)
}

/// Closed-form normalised Minkowski contents of a uniform Cantor set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CantorContents {
    pub upper: f64,
    pub lower: f64,
    /// Box dimension `-ln N / ln r`.
    pub dimension: f64,
    /// Length scale used in the upper-content formula: the first-level gap
    /// `(1 - N r) / (N - 1)`.
    pub gap_scale: f64,
}

/// Upper and lower normalised Minkowski contents of `C_N^r` at its dimension.
pub fn cantor_minkowski_contents(n: u32, r: f64) -> Result<CantorContents> {
    check_cantor(n, r)?;
    let nf = n as f64;
    let d = -nf.ln() / r.ln();
    let s = (1.0 - nf * r) / (nf - 1.0);
    let norm = gamma_coeff(1.0 - d)?;
    let upper = 2.0 * nf * (s / 2.0).powf(d) * (1.0 - r) / (1.0 - nf * r) / norm;
    let lower = 2.0 / (1.0 - d) * ((1.0 - d) / (2.0 * d)).powf(d) / norm;
    Ok(CantorContents {
        upper,
        lower,
        dimension: d,
        gap_scale: s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(v: &[Interval]) -> Vec<(f64, f64)> {
        v.iter().map(|i| (i.lo(), i.hi())).collect()
    }

    #[test]
    fn first_level_of_c3_quarter() {
        let segs = cantor_segments(3, 0.25, 0.125).unwrap();
        assert_eq!(
            bounds(&segs),
            vec![(0.0, 0.25), (0.375, 0.625), (0.75, 1.0)]
        );
        let segs = cantor_segments(3, 0.25, 0.3).unwrap();
        assert_eq!(segs.len(), 3);
    }

    #[test]
    fn first_level_of_middle_thirds() {
        let segs = cantor_segments(2, 1.0 / 3.0, 1.0 / 3.0).unwrap();
        let b = bounds(&segs);
        assert_eq!(b.len(), 2);
        assert!((b[0].0 - 0.0).abs() < 1e-15 && (b[0].1 - 1.0 / 3.0).abs() < 1e-15);
        assert!((b[1].0 - 2.0 / 3.0).abs() < 1e-15 && (b[1].1 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn total_length_per_level() {
        // next-level gap at depth d is s r^d; place min_len just above it
        let (n, r) = (3u32, 0.25);
        let s = (1.0 - n as f64 * r) / (n as f64 - 1.0);
        for depth in 1..6 {
            let min_len = s * r.powi(depth) * 1.5;
            let segs = cantor_segments(n, r, min_len).unwrap();
            assert_eq!(segs.len(), 3usize.pow(depth as u32));
            let total: f64 = segs.iter().map(Interval::len).sum();
            assert!((total - (n as f64 * r).powi(depth)).abs() < 1e-12);
        }
    }

    #[test]
    fn halving_min_len_only_splits() {
        let mut prev = cantor_segments(3, 0.3, 0.2).unwrap();
        let mut min_len = 0.1;
        for _ in 0..12 {
            let next = cantor_segments(3, 0.3, min_len).unwrap();
            // every new interval sits inside exactly one old interval
            for iv in &next {
                let parents = prev
                    .iter()
                    .filter(|p| p.lo() <= iv.lo() && iv.hi() <= p.hi())
                    .count();
                assert_eq!(parents, 1);
            }
            // and every old interval keeps at least one piece
            for p in &prev {
                assert!(next.iter().any(|iv| p.lo() <= iv.lo() && iv.hi() <= p.hi()));
            }
            prev = next;
            min_len /= 2.0;
        }
    }

    #[test]
    fn depth_limit_is_reported() {
        assert!(matches!(
            cantor_depth(2, 0.49, 1e-300),
            Err(Error::ResourceLimit(_))
        ));
        assert_eq!(cantor_depth(2, 1.0 / 3.0, 10.0).unwrap(), 1);
    }

    #[test]
    fn ascending_disjoint_inside_unit() {
        let segs = cantor_segments(4, 0.2, 1e-4).unwrap();
        assert!(segs.windows(2).all(|w| w[0].hi() < w[1].lo()));
        assert!(segs.first().unwrap().lo() == 0.0 && segs.last().unwrap().hi() == 1.0);
    }

    #[test]
    fn invalid_parameters() {
        assert!(cantor_segments(1, 0.2, 0.1).is_err());
        assert!(cantor_segments(2, 0.5, 0.1).is_err());
        assert!(cantor_segments(2, 0.3, 0.0).is_err());
        assert!(cantor_minkowski_contents(2, 0.6).is_err());
    }

    #[test]
    fn middle_thirds_contents_with_first_gap_scale() {
        let c = cantor_minkowski_contents(2, 1.0 / 3.0).unwrap();
        assert!((c.gap_scale - 1.0 / 3.0).abs() < 1e-15);
        // independent evaluation of the same closed forms
        assert!((c.upper - 1.929).abs() < 5e-3, "{}", c.upper);
        assert!(c.upper >= c.lower);
    }

    #[test]
    fn upper_dominates_lower_on_grid() {
        for n in 2..7u32 {
            for i in 1..20 {
                let r = i as f64 / 20.0 / n as f64;
                let c = cantor_minkowski_contents(n, r).unwrap();
                assert!(c.upper.is_finite() && c.lower > 0.0);
                assert!(c.upper >= c.lower * (1.0 - 1e-12), "N={n} r={r}: {c:?}");
            }
        }
    }
}
