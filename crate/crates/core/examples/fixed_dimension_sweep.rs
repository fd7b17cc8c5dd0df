//! Keeps the nest dimension at 3/4 and varies alpha across the admissible
//! interval, for both the bi-fractal and the Cantor family.
//!
//! ```bash
//! cargo run --release --example fixed_dimension_sweep > fixed.csv
//! ```

use nestdim::experiment::run_sweep;
use nestdim::report::sweep_csv;
use nestdim::verify::fixed_dimension_sweep_config;

fn main() -> nestdim::Result<()> {
    let config = fixed_dimension_sweep_config();
    let outcome = run_sweep(&config)?;
    print!("{}", sweep_csv(&outcome));

    let within = outcome
        .points
        .iter()
        .filter(|p| p.relative_error < 0.1)
        .count();
    eprintln!("{within}/{} estimates within 10%", outcome.points.len());
    Ok(())
}
