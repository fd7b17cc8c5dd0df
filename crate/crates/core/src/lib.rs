//! Box-counting dimensions of generalised fractal nests.
//!
//! A fractal nest stacks scaled copies of a base set `S` on the unit circle
//! onto concentric rings of radii `k^-alpha` (centre type) or
//! `1 - k^-alpha` (outer type). This crate provides
//!
//! * [`basesets`]: the base sets (`E_alpha`, `D_beta`, uniform Cantor sets,
//!   the circle, cubes), their dimensions and closed-form Minkowski contents;
//! * [`nests`]: tail/core splitting, ring radii and drawing-primitive scenes;
//! * [`theory`]: closed-form nest dimensions and parameter synthesis;
//! * [`boxcount`]: mesh and primitive counters, 1-D sausage measure and
//!   log-log regression;
//! * [`experiment`]: estimation runs and parameter sweeps;
//! * [`render`]: SVG/EPS output where the stroke is the Minkowski sausage;
//! * [`report`]: CSV and summary formatting;
//! * [`verify`]: the end-to-end acceptance checks.
//!
//! ```
//! use nestdim::basesets::BaseSetSpec;
//! use nestdim::nests::NestSpec;
//! use nestdim::theory::bifractal_dimension;
//!
//! let spec = NestSpec::centre(1.0, BaseSetSpec::d_beta(1.0).unwrap()).unwrap();
//! assert_eq!(nestdim::experiment::theory_dimension(&spec).unwrap(), bifractal_dimension(1.0, 1.0));
//! ```

// `!(x > 0.0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basesets;
pub mod boxcount;
pub mod error;
pub mod experiment;
pub mod nests;
pub mod render;
pub mod report;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};
