//! Base sets on the unit interval and the unit circle.
//!
//! Each base set carries its box dimension `delta`. The submodules build
//! finite resolution-`eps` representations of the point sets and Cantor
//! sets, and evaluate their closed-form Minkowski contents.

mod cantor;
mod cube;
mod ealpha;
mod gamma;

use std::fmt;

pub use cantor::{cantor_depth, cantor_minkowski_contents, cantor_segments, CantorContents};
pub use cube::{cube_edge_count, cube_sausage_volume};
pub use ealpha::{d_beta_angles, e_alpha_content, e_alpha_points};
pub(crate) use ealpha::{d_beta_angles_unchecked, e_alpha_points_unchecked};
pub use gamma::{gamma, gamma_coeff};

use crate::error::{Error, Result};

/// The shape of a base set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaseKind {
    /// The single point `1` (angle 0 on the circle).
    Singleton,
    /// `{k^-alpha : k >= 1}`.
    EAlpha { alpha: f64 },
    /// Two mirrored copies of `E_beta` on the first quadrant of the circle.
    DBeta { beta: f64 },
    /// Uniform Cantor set keeping `n` equally spaced pieces of relative length `r`.
    UniformCantor { n: u32, r: f64 },
    /// The whole unit circle.
    FullCircle,
    /// The unit `m`-cube.
    CubeFace { m: u32 },
}

/// A validated base set. Construct through the associated functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseSetSpec {
    kind: BaseKind,
}

impl BaseSetSpec {
    pub fn singleton() -> Self {
        BaseSetSpec {
            kind: BaseKind::Singleton,
        }
    }

    pub fn e_alpha(alpha: f64) -> Result<Self> {
        check_positive("alpha", alpha)?;
        Ok(BaseSetSpec {
            kind: BaseKind::EAlpha { alpha },
        })
    }

    pub fn d_beta(beta: f64) -> Result<Self> {
        check_positive("beta", beta)?;
        Ok(BaseSetSpec {
            kind: BaseKind::DBeta { beta },
        })
    }

    pub fn uniform_cantor(n: u32, r: f64) -> Result<Self> {
        check_cantor(n, r)?;
        Ok(BaseSetSpec {
            kind: BaseKind::UniformCantor { n, r },
        })
    }

    pub fn full_circle() -> Self {
        BaseSetSpec {
            kind: BaseKind::FullCircle,
        }
    }

    pub fn cube_face(m: u32) -> Self {
        BaseSetSpec {
            kind: BaseKind::CubeFace { m },
        }
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    /// Box dimension of the base set.
    pub fn delta(&self) -> f64 {
        base_dimension(self)
    }
}

impl TryFrom<BaseKind> for BaseSetSpec {
    type Error = Error;

    fn try_from(kind: BaseKind) -> Result<Self> {
        match kind {
            BaseKind::Singleton => Ok(Self::singleton()),
            BaseKind::EAlpha { alpha } => Self::e_alpha(alpha),
            BaseKind::DBeta { beta } => Self::d_beta(beta),
            BaseKind::UniformCantor { n, r } => Self::uniform_cantor(n, r),
            BaseKind::FullCircle => Ok(Self::full_circle()),
            BaseKind::CubeFace { m } => Ok(Self::cube_face(m)),
        }
    }
}

impl fmt::Display for BaseSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BaseKind::Singleton => write!(f, "singleton"),
            BaseKind::EAlpha { alpha } => write!(f, "E_alpha(alpha={alpha})"),
            BaseKind::DBeta { beta } => write!(f, "D_beta(beta={beta})"),
            BaseKind::UniformCantor { n, r } => write!(f, "C_{n}^{r}"),
            BaseKind::FullCircle => write!(f, "circle"),
            BaseKind::CubeFace { m } => write!(f, "K_{m}"),
        }
    }
}

/// Box dimension `delta` of a base set.
pub fn base_dimension(spec: &BaseSetSpec) -> f64 {
    match spec.kind {
        BaseKind::Singleton => 0.0,
        BaseKind::EAlpha { alpha } => 1.0 / (1.0 + alpha),
        BaseKind::DBeta { beta } => 1.0 / (1.0 + beta),
        BaseKind::UniformCantor { n, r } => -(n as f64).ln() / r.ln(),
        BaseKind::FullCircle => 1.0,
        BaseKind::CubeFace { m } => m as f64,
    }
}

/// A closed interval `[lo, hi]` on the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo <= hi) {
            return Err(Error::invalid(
                "interval",
                format!("need lo <= hi, got [{lo}, {hi}]"),
            ));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }
}

/// Arc-length parametrisation of the unit circle.
pub fn phi1(theta: f64) -> (f64, f64) {
    (theta.cos(), theta.sin())
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(
            name,
            format!("must be positive and finite, got {v}"),
        ))
    }
}

pub(crate) fn check_cantor(n: u32, r: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(
            "N",
            format!("Cantor sets need N >= 2, got {n}"),
        ));
    }
    if !(r > 0.0 && r * (n as f64) < 1.0) {
        return Err(Error::invalid(
            "r",
            format!("need 0 < r < 1/N = {}, got {r}", 1.0 / n as f64),
        ));
    }
    Ok(())
}
