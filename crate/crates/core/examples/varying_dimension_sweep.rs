//! Targets dimensions from 0.3 to 0.95 with alpha in the centre of the
//! admissible interval.
//!
//! ```bash
//! cargo run --release --example varying_dimension_sweep
//! ```

use nestdim::experiment::run_sweep;
use nestdim::report::format_g;
use nestdim::verify::varying_dimension_sweep_config;

fn main() -> nestdim::Result<()> {
    let outcome = run_sweep(&varying_dimension_sweep_config())?;
    println!(
        "{:<10} {:>8} {:>8} {:>9} {:>8}",
        "family", "d", "alpha", "slope", "rel_err"
    );
    for p in &outcome.points {
        println!(
            "{:<10} {:>8} {:>8} {:>9} {:>8}",
            p.family.to_string(),
            format_g(p.d_target),
            format_g(p.alpha),
            format_g(p.slope),
            format_g(p.relative_error)
        );
    }
    Ok(())
}
