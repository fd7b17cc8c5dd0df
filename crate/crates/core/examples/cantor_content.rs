//! Minkowski contents: closed forms against exact sausage lengths.
//!
//! ```bash
//! cargo run --example cantor_content
//! ```

use nestdim::basesets::{
    cantor_minkowski_contents, cantor_segments, e_alpha_content, e_alpha_points, BaseSetSpec,
};
use nestdim::boxcount::{epsilon_schedule, sausage_measure_1d};
use nestdim::theory::normalized_content_ratio;

fn main() -> nestdim::Result<()> {
    let eps = (-20f64).exp2();
    let pts = e_alpha_points(1.0, eps)?;
    let numeric = normalized_content_ratio(sausage_measure_1d(&pts, &[], eps), 1, 0.5, eps)?;
    println!(
        "E_1: {} points, numeric content {numeric:.5}, closed form {:.5}",
        pts.len(),
        e_alpha_content(1.0)?
    );

    let c = cantor_minkowski_contents(2, 1.0 / 3.0)?;
    let d = BaseSetSpec::uniform_cantor(2, 1.0 / 3.0)?.delta();
    println!(
        "C_2^(1/3): d={d:.6} upper {:.5} lower {:.5}",
        c.upper, c.lower
    );

    // the ratio oscillates between the two contents as eps runs through a period
    let segments = cantor_segments(2, 1.0 / 3.0, 3f64.powi(-9))?;
    for eps in epsilon_schedule(3f64.powi(-3), 3f64.powi(-4), 9)? {
        let ratio = normalized_content_ratio(sausage_measure_1d(&[], &segments, eps), 1, d, eps)?;
        println!("  eps={eps:.6} ratio={ratio:.5}");
    }
    Ok(())
}
