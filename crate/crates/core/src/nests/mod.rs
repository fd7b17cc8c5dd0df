//! Resolution-`eps` geometry of centre and outer fractal nests.
//!
//! A nest places scaled copies of a base set on concentric rings. The
//! centre type uses radii `k^-alpha`, the outer type `1 - k^-alpha`. At a
//! finite resolution only the first `m1` rings are kept individually; the
//! rest are replaced by rings spaced `2 eps` apart.

mod rings;
mod scene;
mod split;

use std::fmt;

pub use rings::{ring_radii, RingRadii};
pub use scene::{generate_scene, primitive_count, visit_scene, Primitive, Scene, Shape};
pub use split::{split_indices, SplitIndices, MAX_INDEX};

use crate::basesets::BaseSetSpec;
use crate::error::{Error, Result};

/// Whether rings accumulate at the origin or at the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NestKind {
    Centre,
    Outer,
}

impl fmt::Display for NestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NestKind::Centre => "centre",
            NestKind::Outer => "outer",
        })
    }
}

/// An `alpha`-regular fractal nest over a base set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NestSpec {
    kind: NestKind,
    alpha: f64,
    base: BaseSetSpec,
}

impl NestSpec {
    pub fn new(kind: NestKind, alpha: f64, base: BaseSetSpec) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::invalid(
                "alpha",
                format!("must be positive, got {alpha}"),
            ));
        }
        Ok(NestSpec { kind, alpha, base })
    }

    pub fn centre(alpha: f64, base: BaseSetSpec) -> Result<Self> {
        Self::new(NestKind::Centre, alpha, base)
    }

    pub fn outer(alpha: f64, base: BaseSetSpec) -> Result<Self> {
        Self::new(NestKind::Outer, alpha, base)
    }

    pub fn kind(&self) -> NestKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn base(&self) -> &BaseSetSpec {
        &self.base
    }
}

impl fmt::Display for NestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} nest, alpha={}, base {}",
            self.kind, self.alpha, self.base
        )
    }
}
