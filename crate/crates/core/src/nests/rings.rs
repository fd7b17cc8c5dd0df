use super::split::split_indices;
use super::{NestKind, NestSpec};
use crate::error::{Error, Result};

/// Ring radii of a nest at one resolution, tail and core kept apart.
#[derive(Debug, Clone, PartialEq)]
pub struct RingRadii {
    /// Individually resolved rings, in index order.
    pub tail: Vec<f64>,
    /// Rings spaced `2 eps` apart that stand in for the unresolved rest.
    pub core: Vec<f64>,
}

impl RingRadii {
    pub fn len(&self) -> usize {
        self.tail.len() + self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.tail.iter().chain(self.core.iter()).copied()
    }
}

/// Radii of the rings drawn for `spec` at resolution `eps`.
///
/// Centre nests: tail `k^-alpha` (k = 1..m1), core `2 k eps` (k = 1..m2).
/// Outer nests: `1 - ` the same offsets, with rings of radius `<= 0`
/// dropped.
pub fn ring_radii(spec: &NestSpec, eps: f64) -> Result<RingRadii> {
    if !(eps > 0.0 && eps < 0.25) {
        return Err(Error::invalid(
            "eps",
            format!("ring radii need eps in (0, 1/4), got {eps}"),
        ));
    }
    let alpha = spec.alpha();
    let split = split_indices(alpha, eps)?;
    let clamp = split.core_clamp();
    let tail_offsets = (1..=split.m1).map(|k| (k as f64).powf(-alpha));
    let core_offsets = (1..=split.m2).map(|k| (2.0 * k as f64 * eps).min(clamp));

    let radii = match spec.kind() {
        NestKind::Centre => RingRadii {
            tail: tail_offsets.collect(),
            core: core_offsets.collect(),
        },
        NestKind::Outer => RingRadii {
            tail: tail_offsets.map(|x| 1.0 - x).filter(|&r| r > 0.0).collect(),
            core: core_offsets.map(|x| 1.0 - x).filter(|&r| r > 0.0).collect(),
        },
    };
    Ok(radii)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basesets::BaseSetSpec;

    #[test]
    fn centre_harmonic_rings() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        let rings = ring_radii(&spec, 1.0 / 40.0).unwrap();
        let tail = [1.0, 0.5, 1.0 / 3.0, 0.25];
        let core = [0.05, 0.1, 0.15, 0.2];
        assert_eq!(rings.tail.len(), 4);
        assert_eq!(rings.core.len(), 4);
        for (a, b) in rings.tail.iter().zip(tail) {
            assert!((a - b).abs() < 1e-15);
        }
        for (a, b) in rings.core.iter().zip(core) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn outer_drops_degenerate_ring() {
        for alpha in [0.5, 1.0, 3.0] {
            let spec = NestSpec::outer(alpha, BaseSetSpec::full_circle()).unwrap();
            let rings = ring_radii(&spec, 0.01).unwrap();
            assert!(rings.iter().all(|r| r > 0.0 && r <= 1.0));
            let split = split_indices(alpha, 0.01).unwrap();
            assert_eq!(rings.tail.len() as u64, split.m1.saturating_sub(1));
            assert!(rings.tail.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn centre_core_below_tail() {
        for alpha in [0.3, 1.0, 2.5] {
            for eps in [0.2, 0.01, 1e-4, 1e-6] {
                let spec = NestSpec::centre(alpha, BaseSetSpec::singleton()).unwrap();
                let rings = ring_radii(&spec, eps).unwrap();
                let floor = rings.tail.iter().copied().fold(1.0, f64::min);
                let top = rings.core.iter().copied().fold(0.0, f64::max);
                assert!(top <= floor * (1.0 + 1e-12), "alpha {alpha} eps {eps}");
                assert!(rings.iter().all(|r| r > 0.0 && r <= 1.0));
            }
        }
    }

    #[test]
    fn core_spacing_is_two_eps() {
        let eps = (-14f64).exp2();
        let spec = NestSpec::centre(0.7, BaseSetSpec::singleton()).unwrap();
        let rings = ring_radii(&spec, eps).unwrap();
        assert!(rings.core.windows(2).all(|w| w[1] - w[0] == 2.0 * eps));
        assert_eq!(rings.core[0], 2.0 * eps);
    }

    #[test]
    fn rejects_coarse_eps() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        assert!(ring_radii(&spec, 0.25).is_err());
        assert!(ring_radii(&spec, 0.0).is_err());
    }
}
