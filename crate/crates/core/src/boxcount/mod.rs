//! Empirical dimension estimation.
//!
//! Two counters produce `N_eps`: the weighted primitive count of a scene
//! and an independent count of occupied `eps`-mesh cells. A log-log least
//! squares fit of the resulting series gives the dimension estimate.

mod grid;
mod regression;
mod sausage;
mod schedule;

pub use grid::{grid_count, OccupancyGrid, DEFAULT_CELL_CAP};
pub use regression::{regression_dimension, relative_error, EstimateReport};
pub use sausage::sausage_measure_1d;
pub use schedule::epsilon_schedule;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which counter produced a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CounterKind {
    Primitive,
    Grid,
}

impl fmt::Display for CounterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CounterKind::Primitive => "primitive",
            CounterKind::Grid => "grid",
        })
    }
}

impl FromStr for CounterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primitive" => Ok(CounterKind::Primitive),
            "grid" => Ok(CounterKind::Grid),
            other => Err(Error::invalid(
                "counter",
                format!("expected primitive|grid, got {other}"),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountRow {
    pub eps: f64,
    pub count: u64,
}

/// `(eps, N_eps)` pairs with strictly decreasing `eps`.
#[derive(Debug, Clone, PartialEq)]
pub struct CountSeries {
    rows: Vec<CountRow>,
    counter: CounterKind,
}

impl CountSeries {
    pub fn new(rows: Vec<CountRow>, counter: CounterKind) -> Result<Self> {
        if rows.windows(2).any(|w| !(w[0].eps > w[1].eps)) {
            return Err(Error::invalid("series", "eps must be strictly decreasing"));
        }
        if let Some(row) = rows.iter().find(|r| r.count == 0 || !(r.eps > 0.0)) {
            return Err(Error::invalid(
                "series",
                format!("eps and count must be positive, got {row:?}"),
            ));
        }
        Ok(CountSeries { rows, counter })
    }

    pub fn rows(&self) -> &[CountRow] {
        &self.rows
    }

    pub fn counter(&self) -> CounterKind {
        self.counter
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
