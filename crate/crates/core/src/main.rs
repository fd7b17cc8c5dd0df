#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nestdim::basesets::BaseSetSpec;
use nestdim::boxcount::{epsilon_schedule, CounterKind};
use nestdim::experiment::{
    estimate, fixed_dimension_alphas, linspace, run_sweep, Family, SweepConfig, SweepGrid,
};
use nestdim::nests::{NestKind, NestSpec};
use nestdim::render::{render_nest, Canvas, ImageFormat, DEFAULT_EPS, DEFAULT_SIZE};
use nestdim::{report, verify, Error};

#[derive(Parser)]
#[command(
    name = "nestdim",
    version,
    about = "Render fractal nests and estimate their box dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a nest as SVG or EPS.
    Render(RenderArgs),
    /// Count N_eps over an eps schedule and fit the log-log slope.
    Estimate(EstimateArgs),
    /// Estimate dimensions over a grid of synthesised nests.
    Sweep(SweepArgs),
    /// Run the acceptance checks.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Centre,
    Outer,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Singleton,
    Ealpha,
    Dbeta,
    Cantor,
    Circle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Counter {
    Primitive,
    Grid,
}

impl From<Counter> for CounterKind {
    fn from(c: Counter) -> Self {
        match c {
            Counter::Primitive => CounterKind::Primitive,
            Counter::Grid => CounterKind::Grid,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Eps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fixed,
    Varying,
}

#[derive(Args)]
struct NestArgs {
    #[arg(long, value_enum, default_value = "centre")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "singleton")]
    base: Base,
    /// Ring exponent.
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Exponent of the ealpha / dbeta base.
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Number of Cantor pieces.
    #[arg(long = "N", default_value_t = 2)]
    n: u32,
    /// Relative length of each Cantor piece.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    r: f64,
}

impl NestArgs {
    fn spec(&self) -> Result<NestSpec, Error> {
        let base = match self.base {
            Base::Singleton => BaseSetSpec::singleton(),
            Base::Ealpha => BaseSetSpec::e_alpha(self.beta)?,
            Base::Dbeta => BaseSetSpec::d_beta(self.beta)?,
            Base::Cantor => BaseSetSpec::uniform_cantor(self.n, self.r)?,
            Base::Circle => BaseSetSpec::full_circle(),
        };
        let kind = match self.kind {
            Kind::Centre => NestKind::Centre,
            Kind::Outer => NestKind::Outer,
        };
        NestSpec::new(kind, self.alpha, base)
    }
}

#[derive(Args)]
struct ScheduleArgs {
    #[arg(long, default_value_t = (-10f64).exp2())]
    eps_hi: f64,
    #[arg(long, default_value_t = (-25f64).exp2())]
    eps_lo: f64,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, value_enum, default_value = "primitive")]
    counter: Counter,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    nest: NestArgs,
    /// Half line width in world units (the unit disk has radius 1).
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
    /// Canvas side in pixels.
    #[arg(long, default_value_t = DEFAULT_SIZE)]
    size: u32,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    nest: NestArgs,
    #[command(flatten)]
    schedule: ScheduleArgs,
    /// CSV output file ("-" for stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "fixed")]
    mode: Mode,
    /// Target dimension of the fixed-dimension sweep.
    #[arg(long, default_value_t = 0.75)]
    dim: f64,
    /// Explicit exponents for the fixed-dimension sweep (comma separated).
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    /// Lowest and highest target dimension of the varying-dimension sweep.
    #[arg(long, default_value_t = 0.3)]
    dim_lo: f64,
    #[arg(long, default_value_t = 0.95)]
    dim_hi: f64,
    /// Number of grid points (12 for fixed, 8 for varying when omitted).
    #[arg(long)]
    points: Option<usize>,
    /// Number of pieces of the Cantor family.
    #[arg(long = "N", default_value_t = 3)]
    n: u32,
    #[command(flatten)]
    schedule: ScheduleArgs,
    /// Accept exponents at or beyond the upper end of the admissible interval.
    #[arg(long)]
    force: bool,
    /// CSV output file ("-" for stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Validation(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display())))
        }
        _ => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Render(args) => {
            let format = match args.format {
                Format::Svg => ImageFormat::Svg,
                Format::Eps => ImageFormat::Eps,
            };
            let image = render_nest(
                &args.nest.spec()?,
                args.eps,
                Canvas {
                    size: args.size,
                    format,
                },
            )?;
            write_output(args.out.as_deref(), &image)
        }
        Command::Estimate(args) => {
            let spec = args.nest.spec()?;
            let s = &args.schedule;
            let schedule = epsilon_schedule(s.eps_hi, s.eps_lo, s.samples)?;
            let est = estimate(&spec, &schedule, s.counter.into())?;
            if let Some(out) = &args.out {
                write_output(Some(out), &report::estimate_csv(&est))?;
            }
            println!("{}", report::summary_line(&est.report));
            Ok(())
        }
        Command::Sweep(args) => {
            let grid = match args.mode {
                Mode::Fixed if !args.alpha.is_empty() => SweepGrid::FixedDimension {
                    d: args.dim,
                    alphas: args.alpha,
                },
                Mode::Fixed => {
                    if !(args.dim > 0.0 && args.dim <= 1.0) {
                        return Err(Failure::Validation(format!(
                            "dim: need 0 < d <= 1, got {}",
                            args.dim
                        )));
                    }
                    let alphas =
                        fixed_dimension_alphas(args.dim, args.points.unwrap_or(12), 0.05, 0.15);
                    SweepGrid::FixedDimension {
                        d: args.dim,
                        alphas,
                    }
                }
                Mode::Varying => {
                    if !(args.dim_lo > 0.0 && args.dim_lo <= args.dim_hi && args.dim_hi <= 1.0) {
                        return Err(Failure::Validation(format!(
                            "dim-lo/dim-hi: need 0 < lo <= hi <= 1, got {} and {}",
                            args.dim_lo, args.dim_hi
                        )));
                    }
                    SweepGrid::VaryingDimension {
                        dims: linspace(args.dim_lo, args.dim_hi, args.points.unwrap_or(8)),
                    }
                }
            };
            let s = &args.schedule;
            let config = SweepConfig {
                grid,
                families: vec![Family::Bifractal, Family::Cantor],
                cantor_n: args.n,
                schedule: epsilon_schedule(s.eps_hi, s.eps_lo, s.samples)?,
                counter: s.counter.into(),
                force: args.force,
            };
            let outcome = run_sweep(&config)?;
            for skip in &outcome.skipped {
                eprintln!(
                    "warning: skipping d={} alpha={}: {}",
                    skip.d_target, skip.alpha, skip.reason
                );
            }
            write_output(args.out.as_deref(), &report::sweep_csv(&outcome))
        }
        Command::Verify => {
            let results = verify::run_all();
            print!("{}", verify::report_text(&results));
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Runtime("some criteria failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
