//! One-dimensional parameter sweeps.

use crate::error::{CliError, Result};
use crate::model::{evaluate, ModelVariant, Setup};
use crate::output::{number, optional, Precision, Table};
use beatwave_core::constants::rad_to_deg;
use beatwave_core::kinematics::electron_from_kinetic;

/// Swept quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanAxis {
    /// Electron kinetic energy (keV).
    KineticEnergy,
    /// Film refractive index.
    RefractiveIndex,
    /// Film thickness (Å).
    Thickness,
}

impl ScanAxis {
    fn column(self) -> &'static str {
        match self {
            ScanAxis::KineticEnergy => "kinetic_energy_kev",
            ScanAxis::RefractiveIndex => "refractive_index",
            ScanAxis::Thickness => "thickness_angstrom",
        }
    }
}

/// `steps` evenly spaced points from `from` to `to`, both included exactly.
pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![from];
    }
    let last = steps - 1;
    (0..steps)
        .map(|i| {
            if i == last {
                to
            } else {
                from + (to - from) * i as f64 / last as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub value: f64,
    pub lambda_b_cm: f64,
    pub alpha_rad: Option<f64>,
}

pub fn scan(
    setup: &Setup,
    axis: ScanAxis,
    from: f64,
    to: f64,
    steps: usize,
    variant: ModelVariant,
    target_cm: Option<f64>,
) -> Result<Vec<ScanPoint>> {
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "scan needs at least 2 steps, got {steps}"
        )));
    }
    if !(from.is_finite() && to.is_finite() && from > 0.0 && from < to) {
        return Err(CliError::Usage(format!(
            "scan range must satisfy 0 < from < to, got [{from}, {to}]"
        )));
    }
    linspace(from, to, steps)
        .into_iter()
        .map(|value| {
            let mut s = setup.clone();
            match axis {
                ScanAxis::KineticEnergy => s.beam = electron_from_kinetic(value * 1e3)?,
                ScanAxis::RefractiveIndex => s.refractive_index = Some(value),
                ScanAxis::Thickness => s.thickness_angstrom = value,
            }
            let eval = evaluate(&s, variant, target_cm)?;
            let alpha = eval
                .mode
                .map(|m| m.alpha)
                .or(eval.radiation.map(|r| r.alpha_internal));
            Ok(ScanPoint {
                value,
                lambda_b_cm: eval.prediction.lambda_b,
                alpha_rad: alpha,
            })
        })
        .collect()
}

pub fn table(axis: ScanAxis, points: &[ScanPoint], precision: Precision) -> Table {
    let mut t = Table::new([axis.column(), "lambda_b_cm", "alpha_deg"]);
    for p in points {
        t.push(vec![
            number(p.value, precision),
            number(p.lambda_b_cm, precision),
            optional(p.alpha_rad.map(rad_to_deg), precision),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartz() -> Setup {
        Setup::new("SiO2", Some(1.559), 50.0, 4880.0, 1000.0).unwrap()
    }

    #[test]
    fn energy_sweep_increases() {
        let pts = scan(
            &quartz(),
            ScanAxis::KineticEnergy,
            10.0,
            100.0,
            19,
            ModelVariant::Planewave,
            None,
        )
        .unwrap();
        assert_eq!(pts.len(), 19);
        assert!(pts.windows(2).all(|w| w[1].lambda_b_cm > w[0].lambda_b_cm));
    }

    #[test]
    fn index_sweep_decreases_from_limit() {
        let pts = scan(
            &quartz(),
            ScanAxis::RefractiveIndex,
            1.0,
            2.0,
            21,
            ModelVariant::Planewave,
            None,
        )
        .unwrap();
        assert!((pts[0].lambda_b_cm - 1.515).abs() < 1e-3);
        assert!(pts.windows(2).all(|w| w[1].lambda_b_cm < w[0].lambda_b_cm));
    }

    #[test]
    fn two_steps_hit_endpoints() {
        let pts = scan(
            &quartz(),
            ScanAxis::Thickness,
            300.0,
            1900.0,
            2,
            ModelVariant::Tm(0),
            None,
        )
        .unwrap();
        assert_eq!(
            pts.iter().map(|p| p.value).collect::<Vec<_>>(),
            vec![300.0, 1900.0]
        );
        assert!(pts[0].alpha_rad.unwrap() > pts[1].alpha_rad.unwrap());
    }

    #[test]
    fn invalid_ranges() {
        let s = quartz();
        for (from, to, steps) in [
            (1.0, 2.0, 1),
            (2.0, 1.0, 5),
            (0.0, 1.0, 5),
            (f64::NAN, 1.0, 3),
        ] {
            let err = scan(
                &s,
                ScanAxis::KineticEnergy,
                from,
                to,
                steps,
                ModelVariant::Base,
                None,
            )
            .unwrap_err();
            assert_eq!(err.exit_code(), 2);
        }
    }

    #[test]
    fn linspace_is_exact_at_ends() {
        let v = linspace(0.1, 0.7, 7);
        assert_eq!(v[0], 0.1);
        assert_eq!(v[6], 0.7);
        assert_eq!(linspace(3.0, 3.0, 1), vec![3.0]);
    }
}
