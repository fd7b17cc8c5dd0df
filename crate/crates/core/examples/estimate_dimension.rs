//! Estimates the box dimension of one nest and prints the CSV the CLI
//! would write, followed by the summary line.
//!
//! ```bash
//! cargo run --release --example estimate_dimension
//! ```

use nestdim::basesets::BaseSetSpec;
use nestdim::boxcount::{epsilon_schedule, CounterKind};
use nestdim::experiment::estimate;
use nestdim::nests::NestSpec;
use nestdim::report::{estimate_csv, summary_line};

fn main() -> nestdim::Result<()> {
    // E_alpha rings around a point: dimension 1/(1 + alpha)
    let spec = NestSpec::centre(1.0, BaseSetSpec::singleton())?;
    let schedule = epsilon_schedule((-10f64).exp2(), (-25f64).exp2(), 10)?;

    let est = estimate(&spec, &schedule, CounterKind::Primitive)?;
    print!("{}", estimate_csv(&est));
    println!("{}", summary_line(&est.report));
    Ok(())
}
