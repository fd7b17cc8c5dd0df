//! Closed-form dimensions of a few nests and the parameters that give a
//! bi-fractal or Cantor nest of a chosen dimension.
//!
//! ```bash
//! cargo run --example theory_table -- 0.75
//! ```

use nestdim::nests::NestKind;
use nestdim::theory::{
    alpha_interval, centered_alpha, hypersphere_nest_dimension, nest_dimension, solve_parameters,
};

fn main() -> nestdim::Result<()> {
    let d: f64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0.75);

    println!(
        "{:>6} {:>6} {:>8} {:>8} {:>13}",
        "alpha", "delta", "centre", "outer", "regime"
    );
    for (alpha, delta) in [
        (1.0, 0.0),
        (1.0, 0.5),
        (4.0 / 3.0, 0.75),
        (3.0, 0.5),
        (1.0, 1.0),
    ] {
        let c = nest_dimension(NestKind::Centre, alpha, delta)?;
        let o = nest_dimension(NestKind::Outer, alpha, delta)?;
        println!(
            "{alpha:>6.3} {delta:>6.3} {:>8.4} {:>8.4} {:>13?}",
            c.value, o.value, c.regime
        );
    }
    println!(
        "sphere nest in R^3, alpha=1: centre {}, outer {}",
        hypersphere_nest_dimension(3, 1.0, NestKind::Centre)?,
        hypersphere_nest_dimension(3, 1.0, NestKind::Outer)?
    );

    let (lo, hi) = alpha_interval(d);
    println!("\ntarget d={d}: alpha must lie in ({lo:.4}, {hi:.4})");
    let alpha = centered_alpha(d);
    let p = solve_parameters(d, alpha, 3)?;
    println!(
        "centred alpha={alpha:.4}: delta={:.4} beta={:.4} r={:.5} (N=3)",
        p.delta, p.beta, p.r
    );
    if let Err(e) = solve_parameters(d, hi, 3) {
        println!("alpha={hi:.4}: {e}");
    }
    Ok(())
}
