//! Behaviour around the critical exponent where alpha * delta = 1.
//!
//! At d = 3/4 the admissible interval ends at alpha = 4/3. Past it the base
//! carries the whole dimension. Right at it the counts pick up a log
//! factor, the fitted slope drifts up and the residuals grow.
//!
//! ```bash
//! cargo run --release --example critical_point
//! ```

use nestdim::boxcount::CounterKind;
use nestdim::experiment::{estimate, synthesise, Family};
use nestdim::nests::NestKind;
use nestdim::theory::nest_dimension;
use nestdim::verify::critical_schedule;

fn main() -> nestdim::Result<()> {
    let schedule = critical_schedule();
    for alpha in [0.8, 4.0 / 3.0, 3.0] {
        let params = synthesise(0.75, alpha, 3, true)?;
        let spec = Family::Bifractal.nest(&params)?;
        let theory = nest_dimension(NestKind::Centre, alpha, params.delta)?;
        let est = estimate(&spec, &schedule, CounterKind::Primitive)?;
        println!(
            "alpha={alpha:.4} beta={:.4} regime={:?} slope={:.4} max|res|={:.4}",
            params.beta,
            theory.regime,
            est.report.slope,
            est.report.max_abs_residual()
        );
    }
    Ok(())
}
