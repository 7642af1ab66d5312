//! Gridded evaluation of the electron density behind the film.

use super::scan::linspace;
use crate::error::{CliError, Result};
use crate::output::{number, Precision, Table};
use beatwave_core::pattern::{density, envelope_extrema, PatternParams, PatternSample};
use std::str::FromStr;

/// Largest grid `pattern` will emit.
pub const MAX_ROWS: usize = 10_000_000;

/// `from:to:steps` along one coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn values(&self) -> Vec<f64> {
        linspace(self.from, self.to, self.steps)
    }
}

impl FromStr for GridAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [from, to, steps] = parts.as_slice() else {
            return Err(format!("expected from:to:steps, got {s:?}"));
        };
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}"));
        let (from, to) = (num(from)?, num(to)?);
        let steps: usize = steps
            .trim()
            .parse()
            .map_err(|e| format!("{steps:?}: {e}"))?;
        if steps == 0 || !from.is_finite() || !to.is_finite() {
            return Err(format!("invalid grid {s:?}"));
        }
        if steps == 1 && from != to {
            return Err(format!("a single-point grid needs from == to, got {s:?}"));
        }
        Ok(GridAxis { from, to, steps })
    }
}

/// Evaluates ρ/ρ0 over the x (Å) × z (cm) × t (s) grid. Rows are ordered
/// with x outermost and t innermost.
pub fn grid(
    params: &PatternParams,
    x: GridAxis,
    z: GridAxis,
    t: GridAxis,
) -> Result<Vec<PatternSample>> {
    let rows = x
        .steps
        .checked_mul(z.steps)
        .and_then(|r| r.checked_mul(t.steps))
        .filter(|&r| r <= MAX_ROWS)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "grid of {} x {} x {} points exceeds the {MAX_ROWS}-row limit",
                x.steps, z.steps, t.steps
            ))
        })?;
    let (xs, zs, ts) = (x.values(), z.values(), t.values());
    let mut out = Vec::with_capacity(rows);
    for &xv in &xs {
        for &zv in &zs {
            for &tv in &ts {
                out.push(density(params, xv, zv, tv)?);
            }
        }
    }
    Ok(out)
}

pub fn samples_table(samples: &[PatternSample], precision: Precision) -> Table {
    let mut t = Table::new(["x", "z", "t", "rho_ratio"]);
    for s in samples {
        t.push(vec![
            number(s.x, precision),
            number(s.z, precision),
            number(s.t, precision),
            number(s.rho_ratio, precision),
        ]);
    }
    t
}

pub fn extrema_table(params: &PatternParams, z_max: f64, precision: Precision) -> Result<Table> {
    let mut t = Table::new(["z", "amplitude"]);
    for (z, a) in envelope_extrema(params, z_max)? {
        t.push(vec![number(z, precision), number(a, precision)]);
    }
    Ok(t)
}
