//! SVG and EPS output of a nest scene.
//!
//! The disk of radius `1 + eps` fills a square canvas, so strokes on the
//! unit circle are not clipped. Every primitive is stroked with width
//! `2 eps` and round caps: a point becomes an `eps`-disk and an arc its
//! `eps`-sausage.

use std::f64::consts::{PI, TAU};
use std::fmt::{self, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nests::{generate_scene, NestSpec, Scene, Shape};

pub const DEFAULT_SIZE: u32 = 600;

/// Default half line width in world units, about 1/300 of the canvas.
pub const DEFAULT_EPS: f64 = 1.0 / 150.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ImageFormat {
    #[default]
    Svg,
    Eps,
}

impl fmt::Display for ImageFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ImageFormat::Svg => "svg",
            ImageFormat::Eps => "eps",
        })
    }
}

impl FromStr for ImageFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(ImageFormat::Svg),
            "eps" => Ok(ImageFormat::Eps),
            other => Err(Error::invalid(
                "format",
                format!("expected svg|eps, got {other}"),
            )),
        }
    }
}

/// Canvas size in pixels and output format.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canvas {
    pub size: u32,
    pub format: ImageFormat,
}

impl Default for Canvas {
    fn default() -> Self {
        Canvas {
            size: DEFAULT_SIZE,
            format: ImageFormat::Svg,
        }
    }
}

impl Canvas {
    /// Pixels per world unit when drawing with half line width `eps`.
    pub fn scale(&self, eps: f64) -> f64 {
        self.size as f64 / (2.0 * (1.0 + eps))
    }
}

/// Generates the scene of `spec` at `eps` and renders it.
pub fn render_nest(spec: &NestSpec, eps: f64, canvas: Canvas) -> Result<String> {
    if canvas.size == 0 {
        return Err(Error::invalid("size", "canvas must be at least 1 pixel"));
    }
    let scene = generate_scene(spec, eps)?;
    Ok(render_scene(&scene, canvas))
}

/// Renders an existing scene; the stroke width is `2 * scene.eps()`.
pub fn render_scene(scene: &Scene, canvas: Canvas) -> String {
    match canvas.format {
        ImageFormat::Svg => svg(scene, canvas),
        ImageFormat::Eps => eps(scene, canvas),
    }
}

// Arcs of a full turn or more cannot be written as one SVG/PS arc segment.
fn split_arc(lo: f64, hi: f64) -> Vec<(f64, f64)> {
    if hi - lo >= TAU {
        let mid = lo + PI;
        vec![(lo, mid), (mid, lo + TAU)]
    } else {
        vec![(lo, hi)]
    }
}

fn svg(scene: &Scene, canvas: Canvas) -> String {
    let size = canvas.size;
    let s = canvas.scale(scene.eps());
    let c = size as f64 / 2.0;
    let px = |rho: f64, t: f64| (c + rho * t.cos() * s, c - rho * t.sin() * s);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect width="{size}" height="{size}" fill="white"/>"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-width="{:.4}" stroke-linecap="round">"#,
        2.0 * scene.eps() * s
    )
    .unwrap();
    for p in scene.primitives() {
        let rho = p.ring_radius;
        match p.shape {
            Shape::Point { angle } => {
                let (x, y) = px(rho, angle);
                writeln!(out, r#"<path d="M{x:.3} {y:.3}h0"/>"#).unwrap();
            }
            Shape::Arc { lo, hi } => {
                for (a, b) in split_arc(lo, hi) {
                    let (x0, y0) = px(rho, a);
                    let (x1, y1) = px(rho, b);
                    let r = rho * s;
                    let large = u8::from(b - a > PI);
                    // counter-clockwise in world coordinates is sweep 0 once y is flipped
                    writeln!(
                        out,
                        r#"<path d="M{x0:.3} {y0:.3}A{r:.3} {r:.3} 0 {large} 0 {x1:.3} {y1:.3}"/>"#
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn eps(scene: &Scene, canvas: Canvas) -> String {
    let size = canvas.size;
    let s = canvas.scale(scene.eps());
    let c = size as f64 / 2.0;

    let mut out = String::new();
    out.push_str("%!PS-Adobe-3.0 EPSF-3.0\n");
    writeln!(out, "%%BoundingBox: 0 0 {size} {size}").unwrap();
    out.push_str("%%EndComments\n");
    writeln!(
        out,
        "1 setlinecap {:.4} setlinewidth",
        2.0 * scene.eps() * s
    )
    .unwrap();
    writeln!(out, "/p {{ newpath moveto 0 0 rlineto stroke }} bind def").unwrap();
    writeln!(out, "/a {{ newpath {c} {c} 5 2 roll arc stroke }} bind def").unwrap();
    for prim in scene.primitives() {
        let rho = prim.ring_radius;
        match prim.shape {
            Shape::Point { angle } => {
                let x = c + rho * angle.cos() * s;
                let y = c + rho * angle.sin() * s;
                writeln!(out, "{x:.3} {y:.3} p").unwrap();
            }
            Shape::Arc { lo, hi } => {
                for (a, b) in split_arc(lo, hi) {
                    writeln!(
                        out,
                        "{:.3} {:.4} {:.4} a",
                        rho * s,
                        a.to_degrees(),
                        b.to_degrees()
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("showpage\n%%EOF\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basesets::BaseSetSpec;

    #[test]
    fn svg_has_one_path_per_primitive() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::d_beta(1.0).unwrap()).unwrap();
        let svg = render_nest(&spec, DEFAULT_EPS, Canvas::default()).unwrap();
        let scene = generate_scene(&spec, DEFAULT_EPS).unwrap();
        assert_eq!(svg.matches("<path").count(), scene.len());
        assert!(svg.contains(r#"stroke-width="3.9735""#));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn full_circle_is_split() {
        let spec = NestSpec::outer(1.0, BaseSetSpec::full_circle()).unwrap();
        let scene = generate_scene(&spec, 0.05).unwrap();
        let svg = render_scene(&scene, Canvas::default());
        assert_eq!(svg.matches("<path").count(), 2 * scene.len());
        let eps = render_scene(
            &scene,
            Canvas {
                format: ImageFormat::Eps,
                ..Canvas::default()
            },
        );
        assert_eq!(
            eps.lines().filter(|l| l.ends_with(" a")).count(),
            2 * scene.len()
        );
    }

    #[test]
    fn coarse_eps_still_draws() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        let svg = render_nest(
            &spec,
            0.24,
            Canvas {
                size: 50,
                format: ImageFormat::Svg,
            },
        )
        .unwrap();
        assert!(svg.contains("<path"));
    }

    #[test]
    fn deterministic_bytes() {
        let spec = NestSpec::centre(0.9, BaseSetSpec::uniform_cantor(3, 0.2).unwrap()).unwrap();
        for format in [ImageFormat::Svg, ImageFormat::Eps] {
            let canvas = Canvas { size: 300, format };
            assert_eq!(
                render_nest(&spec, 0.01, canvas).unwrap(),
                render_nest(&spec, 0.01, canvas).unwrap()
            );
        }
    }

    #[test]
    fn outer_ring_fits_inside_canvas() {
        let spec = NestSpec::centre(1.0, BaseSetSpec::singleton()).unwrap();
        let svg = render_nest(
            &spec,
            0.1,
            Canvas {
                size: 220,
                format: ImageFormat::Svg,
            },
        )
        .unwrap();
        // 100 px per unit: the point at radius 1 leaves exactly one stroke radius of margin
        assert!(svg.contains(r#"<path d="M210.000 110.000h0"/>"#), "{svg}");
        assert!(svg.contains(r#"stroke-width="20.0000""#));
    }
}
