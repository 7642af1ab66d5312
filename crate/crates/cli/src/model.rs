//! Resolved physical inputs and dispatch over the beat-wavelength models.

use crate::error::{CliError, Result};
use beatwave_core::beating::{
    beat_base, beat_exact, beat_planewave, beat_tm, invert_radiation_angle,
};
use beatwave_core::kinematics::{electron_from_kinetic, laser_from_wavelength};
use beatwave_core::waveguide::{solve_tm_mode, Slab};
use beatwave_core::{BeatPrediction, ElectronBeam, LaserField, ModeSolution, RadiationAngles};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// A beat-wavelength model selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelVariant {
    /// Upper limit λ_b0.
    Base,
    /// Plane wave of index n.
    Planewave,
    /// Exact sideband momenta with a plane-wave kick n·k0.
    Exact,
    /// Guided TM_m mode of the slab.
    Tm(u32),
    /// Radiation mode reproducing a target λ_b.
    Radiation,
}

impl FromStr for ModelVariant {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let variant = match lower.as_str() {
            "base" | "upper-limit" => ModelVariant::Base,
            "planewave" | "plane-wave" => ModelVariant::Planewave,
            "exact" => ModelVariant::Exact,
            "radiation" => ModelVariant::Radiation,
            "tm" => ModelVariant::Tm(0),
            other => match other.strip_prefix("tm").map(str::parse::<u32>) {
                Some(Ok(m)) => ModelVariant::Tm(m),
                _ => {
                    return Err(CliError::Usage(format!(
                        "unknown model variant {s:?} (expected base, planewave, exact, tm<m> or radiation)"
                    )))
                }
            },
        };
        Ok(variant)
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelVariant::Base => f.write_str("base"),
            ModelVariant::Planewave => f.write_str("planewave"),
            ModelVariant::Exact => f.write_str("exact"),
            ModelVariant::Tm(m) => write!(f, "tm{m}"),
            ModelVariant::Radiation => f.write_str("radiation"),
        }
    }
}

impl Serialize for ModelVariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Fully resolved inputs for one evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Setup {
    pub material: String,
    /// `None` when the material is listed without an index.
    pub refractive_index: Option<f64>,
    pub beam: ElectronBeam,
    pub laser: LaserField,
    pub thickness_angstrom: f64,
}

impl Setup {
    pub fn new(
        material: impl Into<String>,
        refractive_index: Option<f64>,
        kinetic_energy_kev: f64,
        wavelength_angstrom: f64,
        thickness_angstrom: f64,
    ) -> Result<Self> {
        Ok(Setup {
            material: material.into(),
            refractive_index,
            beam: electron_from_kinetic(kinetic_energy_kev * 1e3)?,
            laser: laser_from_wavelength(wavelength_angstrom)?,
            thickness_angstrom,
        })
    }

    pub fn index(&self) -> Result<f64> {
        self.refractive_index.ok_or_else(|| {
            CliError::Validation(format!(
                "refractive index of {} is unavailable; pass --n",
                self.material
            ))
        })
    }

    pub fn slab(&self) -> Result<Slab> {
        Ok(Slab::new(
            self.thickness_angstrom,
            self.index()?,
            self.material.clone(),
        )?)
    }
}

/// Result of evaluating one model.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub variant: ModelVariant,
    pub prediction: BeatPrediction,
    /// Transverse photon wavenumber the model corresponds to (rad/Å).
    pub x_wavenumber: f64,
    pub mode: Option<ModeSolution>,
    pub radiation: Option<RadiationAngles>,
}

/// Evaluates `variant`. `target_cm` is required for the radiation model.
pub fn evaluate(
    setup: &Setup,
    variant: ModelVariant,
    target_cm: Option<f64>,
) -> Result<Evaluation> {
    let (beam, laser) = (&setup.beam, &setup.laser);
    let k0 = laser.vacuum_wavenumber();
    let plain = |prediction, x_wavenumber| Evaluation {
        variant,
        prediction,
        x_wavenumber,
        mode: None,
        radiation: None,
    };
    Ok(match variant {
        ModelVariant::Base => plain(beat_base(beam, laser), k0),
        ModelVariant::Planewave => {
            let n = setup.index()?;
            plain(beat_planewave(beam, laser, n)?, n * k0)
        }
        ModelVariant::Exact => {
            let k = setup.index()? * k0;
            plain(beat_exact(beam, laser, k)?, k)
        }
        ModelVariant::Tm(m) => {
            let slab = setup.slab()?;
            let mode = solve_tm_mode(&slab, laser, m)?;
            Evaluation {
                mode: Some(mode),
                ..plain(
                    beat_tm(beam, laser, slab.refractive_index(), mode.alpha)?,
                    mode.effective_index * k0,
                )
            }
        }
        ModelVariant::Radiation => {
            let target = target_cm.ok_or_else(|| {
                CliError::Usage("the radiation model needs --target-cm".to_string())
            })?;
            let n = setup.index()?;
            let angles = invert_radiation_angle(beam, laser, n, target)?;
            Evaluation {
                radiation: Some(angles),
                ..plain(angles.prediction, n * angles.alpha_internal.cos() * k0)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartz() -> Setup {
        Setup::new("SiO2", Some(1.559), 50.0, 4880.0, 1000.0).unwrap()
    }

    #[test]
    fn variant_names() {
        for (s, v) in [
            ("base", ModelVariant::Base),
            ("PlaneWave", ModelVariant::Planewave),
            ("exact", ModelVariant::Exact),
            ("tm", ModelVariant::Tm(0)),
            ("tm3", ModelVariant::Tm(3)),
            ("radiation", ModelVariant::Radiation),
        ] {
            assert_eq!(s.parse::<ModelVariant>().unwrap(), v);
        }
        assert!("tmx".parse::<ModelVariant>().is_err());
        assert!("eq4".parse::<ModelVariant>().is_err());
        assert_eq!(ModelVariant::Tm(1).to_string(), "tm1");
    }

    #[test]
    fn dispatch() {
        let s = quartz();
        let tm = evaluate(&s, ModelVariant::Tm(0), None).unwrap();
        assert!((tm.prediction.lambda_b - 1.47).abs() < 0.01);
        assert!(tm.mode.is_some());
        let pw = evaluate(&s, ModelVariant::Planewave, None).unwrap();
        assert!((pw.prediction.lambda_b - 1.22).abs() < 0.01);
        assert!(matches!(
            evaluate(&s, ModelVariant::Tm(1), None),
            Err(CliError::Model(beatwave_core::Error::NoSuchMode { .. }))
        ));
        assert!(matches!(
            evaluate(&s, ModelVariant::Radiation, None),
            Err(CliError::Usage(_))
        ));
        let rad = evaluate(&s, ModelVariant::Radiation, Some(1.7)).unwrap();
        assert!((rad.prediction.lambda_b - 1.7).abs() < 1e-10);
    }

    #[test]
    fn unindexed_material() {
        let s = Setup::new("Al2O3", None, 50.0, 4880.0, 1000.0).unwrap();
        assert!(evaluate(&s, ModelVariant::Base, None).is_ok());
        let err = evaluate(&s, ModelVariant::Planewave, None).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
