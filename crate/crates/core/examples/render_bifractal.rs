//! Draws the centre nest of a bi-fractal (dimension 3/4) and a dot-column
//! nest over a single point, as SVG files in the current directory.
//!
//! ```bash
//! cargo run --example render_bifractal
//! ```

use nestdim::basesets::BaseSetSpec;
use nestdim::nests::NestSpec;
use nestdim::render::{render_nest, Canvas, ImageFormat, DEFAULT_EPS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bifractal = NestSpec::centre(1.0, BaseSetSpec::d_beta(1.0)?)?;
    let dots = NestSpec::centre(1.0, BaseSetSpec::singleton())?;

    for (name, spec) in [("bifractal.svg", bifractal), ("dots.svg", dots)] {
        let svg = render_nest(&spec, DEFAULT_EPS, Canvas::default())?;
        std::fs::write(name, svg)?;
        println!("wrote {name} ({spec})");
    }

    // same picture as EPS, smaller canvas
    let eps = render_nest(
        &bifractal,
        DEFAULT_EPS,
        Canvas {
            size: 300,
            format: ImageFormat::Eps,
        },
    )?;
    std::fs::write("bifractal.eps", eps)?;
    println!("wrote bifractal.eps");
    Ok(())
}
