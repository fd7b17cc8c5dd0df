//! Cross-checks the primitive count against occupied mesh cells.
//!
//! ```bash
//! cargo run --release --example grid_vs_primitive
//! ```

use nestdim::boxcount::CounterKind;
use nestdim::experiment::{count_at, estimate};
use nestdim::verify::{counter_schedule, counter_specs};

fn main() -> nestdim::Result<()> {
    let schedule = counter_schedule();
    for spec in counter_specs() {
        let p = estimate(&spec, &schedule, CounterKind::Primitive)?;
        let g = estimate(&spec, &schedule, CounterKind::Grid)?;
        println!("{spec}");
        println!(
            "  slopes: primitive {:.4} grid {:.4}",
            p.report.slope, g.report.slope
        );
        let eps = schedule[schedule.len() / 2];
        println!(
            "  at eps={eps:.2e}: {} primitives, {} cells",
            count_at(&spec, eps, CounterKind::Primitive)?,
            count_at(&spec, eps, CounterKind::Grid)?
        );
    }
    Ok(())
}
