use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::rings::ring_radii;
use super::split::split_indices;
use super::NestSpec;
use crate::basesets::{
    cantor_depth, cantor_segments, d_beta_angles_unchecked, e_alpha_points_unchecked, BaseKind,
};
use crate::error::{Error, Result};

/// What is drawn on a ring: a single point or an arc between two angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Point { angle: f64 },
    Arc { lo: f64, hi: f64 },
}

/// One drawing primitive placed on the ring of radius `ring_radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub ring_radius: f64,
    pub shape: Shape,
}

impl Primitive {
    /// Number of `eps`-scale points needed to draw this primitive: 1 for a
    /// point, `ceil(arc length / 2 eps)` for an arc.
    pub fn weight(&self, eps: f64) -> u64 {
        match self.shape {
            Shape::Point { .. } => 1,
            Shape::Arc { lo, hi } => {
                ((self.ring_radius * (hi - lo) / (2.0 * eps)).ceil() as u64).max(1)
            }
        }
    }
}

/// Flat list of primitives describing a nest at resolution `eps`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    primitives: Vec<Primitive>,
    eps: f64,
}

impl Scene {
    pub fn new(primitives: Vec<Primitive>, eps: f64) -> Result<Self> {
        if !(eps > 0.0) {
            return Err(Error::invalid(
                "eps",
                format!("must be positive, got {eps}"),
            ));
        }
        for p in &primitives {
            if !(p.ring_radius > 0.0) {
                return Err(Error::invalid(
                    "ring_radius",
                    format!("must be positive, got {}", p.ring_radius),
                ));
            }
            if let Shape::Arc { lo, hi } = p.shape {
                if !(lo < hi) {
                    return Err(Error::invalid(
                        "arc",
                        format!("need lo < hi, got ({lo}, {hi})"),
                    ));
                }
            }
        }
        Ok(Scene { primitives, eps })
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    /// Weighted primitive count, see [`Primitive::weight`].
    pub fn weighted_count(&self) -> u64 {
        self.primitives.iter().map(|p| p.weight(self.eps)).sum()
    }
}

/// Streams the primitives of `spec` at resolution `eps` into `sink`, ring
/// by ring in tail-then-core order.
pub fn visit_scene<F: FnMut(Primitive)>(spec: &NestSpec, eps: f64, mut sink: F) -> Result<()> {
    let base = spec.base().kind();
    if let BaseKind::CubeFace { m } = base {
        if m >= 2 {
            return Err(Error::UnsupportedBase(format!(
                "K_{m} (only m <= 1 embeds in the circle)"
            )));
        }
    }
    let rings = ring_radii(spec, eps)?;
    for rho in rings.iter() {
        let point = |angle| Primitive {
            ring_radius: rho,
            shape: Shape::Point { angle },
        };
        let arc = |lo, hi| Primitive {
            ring_radius: rho,
            shape: Shape::Arc { lo, hi },
        };
        match base {
            BaseKind::Singleton | BaseKind::CubeFace { m: 0 } => sink(point(0.0)),
            BaseKind::EAlpha { alpha } => {
                for x in e_alpha_points_unchecked(alpha, eps / rho)? {
                    sink(point(x));
                }
            }
            BaseKind::DBeta { beta } => {
                for t in d_beta_angles_unchecked(beta, 4.0 * eps / (PI * rho))? {
                    sink(point(t));
                }
            }
            BaseKind::UniformCantor { n, r } => {
                for iv in cantor_segments(n, r, 4.0 * eps / (PI * rho))? {
                    sink(arc(FRAC_PI_2 * iv.lo(), FRAC_PI_2 * iv.hi()));
                }
            }
            BaseKind::FullCircle => sink(arc(0.0, TAU)),
            BaseKind::CubeFace { .. } => sink(arc(0.0, 1.0)),
        }
    }
    Ok(())
}

/// Builds the full primitive list of `spec` at resolution `eps`.
pub fn generate_scene(spec: &NestSpec, eps: f64) -> Result<Scene> {
    let mut primitives = Vec::new();
    visit_scene(spec, eps, |p| primitives.push(p))?;
    Ok(Scene { primitives, eps })
}

/// `N_eps`: the number of `eps`-scale points needed to draw `spec`.
///
/// Equals [`Scene::weighted_count`] of [`generate_scene`] without
/// materialising the scene.
pub fn primitive_count(spec: &NestSpec, eps: f64) -> Result<u64> {
    // point and Cantor bases: each ring contributes a count known without drawing it
    let per_ring: Option<Box<dyn Fn(f64) -> Result<u64>>> = match spec.base().kind() {
        BaseKind::Singleton | BaseKind::CubeFace { m: 0 } => Some(Box::new(|_| Ok(1))),
        BaseKind::EAlpha { alpha } => Some(Box::new(move |rho| {
            split_indices(alpha, eps / rho).map(|s| s.m1 + s.m2)
        })),
        BaseKind::DBeta { beta } => Some(Box::new(move |rho| {
            split_indices(beta, 4.0 * eps / (PI * rho)).map(|s| 2 * (s.m1 + s.m2))
        })),
        // all kept intervals sit at the same depth and share one length
        BaseKind::UniformCantor { n, r } => Some(Box::new(move |rho| {
            let depth = cantor_depth(n, r, 4.0 * eps / (PI * rho))?;
            let arc = Primitive {
                ring_radius: rho,
                shape: Shape::Arc {
                    lo: 0.0,
                    hi: FRAC_PI_2 * r.powi(depth as i32),
                },
            };
            Ok((n as u64).pow(depth) * arc.weight(eps))
        })),
        _ => None,
    };
    let mut total = 0u64;
    match per_ring {
        Some(f) => {
            for rho in ring_radii(spec, eps)?.iter() {
                total += f(rho)?;
            }
        }
        None => visit_scene(spec, eps, |p| total += p.weight(eps))?,
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basesets::BaseSetSpec;

    #[test]
    fn singleton_nest_one_point_per_ring() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        let scene = generate_scene(&spec, 1.0 / 40.0).unwrap();
        assert_eq!(scene.len(), 8);
        assert!(scene
            .primitives()
            .iter()
            .all(|p| p.shape == Shape::Point { angle: 0.0 }));
        assert_eq!(primitive_count(&spec, 1.0 / 40.0).unwrap(), 8);
    }

    #[test]
    fn circle_nest_one_arc_per_ring() {
        let spec = NestSpec::centre(0.8, BaseSetSpec::full_circle()).unwrap();
        let eps = 1e-3;
        let split = split_indices(0.8, eps).unwrap();
        let scene = generate_scene(&spec, eps).unwrap();
        assert_eq!(scene.len() as u64, split.m1 + split.m2);
    }

    #[test]
    fn d_beta_count_matches_per_ring_split() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::d_beta(1.0).unwrap()).unwrap();
        let eps = 1.0 / 40.0;
        let expected: u64 = ring_radii(&spec, eps)
            .unwrap()
            .iter()
            .map(|rho| {
                let s = split_indices(1.0, 4.0 * eps / (PI * rho)).unwrap();
                2 * (s.m1 + s.m2)
            })
            .sum();
        assert_eq!(primitive_count(&spec, eps).unwrap(), expected);
        assert_eq!(generate_scene(&spec, eps).unwrap().len() as u64, expected);
    }

    #[test]
    fn cantor_ring_is_scaled_base() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::uniform_cantor(3, 0.2).unwrap()).unwrap();
        let eps = 1e-4;
        let scene = generate_scene(&spec, eps).unwrap();
        for rho in ring_radii(&spec, eps).unwrap().iter().step_by(7) {
            let on_ring: Vec<_> = scene
                .primitives()
                .iter()
                .filter(|p| p.ring_radius == rho)
                .map(|p| p.shape)
                .collect();
            let expected: Vec<_> = cantor_segments(3, 0.2, 4.0 * eps / (PI * rho))
                .unwrap()
                .into_iter()
                .map(|iv| Shape::Arc {
                    lo: FRAC_PI_2 * iv.lo(),
                    hi: FRAC_PI_2 * iv.hi(),
                })
                .collect();
            assert_eq!(on_ring, expected, "ring {rho}");
        }
    }

    #[test]
    fn deterministic_and_counts_agree() {
        let bases = [
            BaseSetSpec::singleton(),
            BaseSetSpec::e_alpha(0.5).unwrap(),
            BaseSetSpec::d_beta(2.0).unwrap(),
            BaseSetSpec::uniform_cantor(2, 1.0 / 3.0).unwrap(),
            BaseSetSpec::full_circle(),
            BaseSetSpec::cube_face(1),
        ];
        for base in bases {
            for spec in [
                NestSpec::centre(1.2, base).unwrap(),
                NestSpec::outer(1.2, base).unwrap(),
            ] {
                let a = generate_scene(&spec, 1e-3).unwrap();
                let b = generate_scene(&spec, 1e-3).unwrap();
                assert_eq!(a, b);
                assert!(!a.is_empty());
                assert_eq!(a.weighted_count(), primitive_count(&spec, 1e-3).unwrap());
                assert!(Scene::new(a.primitives().to_vec(), a.eps()).is_ok());
                for eps in [0.2, 0.031, 3.7e-5] {
                    let scene = generate_scene(&spec, eps).unwrap();
                    assert_eq!(
                        scene.weighted_count(),
                        primitive_count(&spec, eps).unwrap(),
                        "{spec} {eps}"
                    );
                }
            }
        }
    }

    #[test]
    fn square_base_is_theory_only() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::cube_face(2)).unwrap();
        assert!(matches!(
            generate_scene(&spec, 0.01),
            Err(Error::UnsupportedBase(_))
        ));
    }

    #[test]
    fn coarse_doubling_never_increases_count() {
        let specs = [
            NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap(),
            NestSpec::centre(0.7, BaseSetSpec::d_beta(1.5).unwrap()).unwrap(),
            NestSpec::outer(1.0, BaseSetSpec::d_beta(1.0).unwrap()).unwrap(),
            NestSpec::centre(1.0, BaseSetSpec::full_circle()).unwrap(),
        ];
        for spec in specs {
            let mut prev = u64::MAX;
            // eps doubles on every step
            for j in (3..=16).rev() {
                let c = primitive_count(&spec, (-(j as f64)).exp2()).unwrap();
                assert!(c <= prev, "{spec}: 2^-{j} -> {c} > {prev}");
                prev = c;
            }
        }
    }
}
