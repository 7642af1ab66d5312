//! Stationary beat wavelength of the three electron sidebands.
//!
//! The exact route ([`beat_exact`]) takes the longitudinal sideband momenta
//! from the mass shell and evaluates `λ_b = 4πħ / (2p_0 − p_1z − p_−1z)`.
//! The closed forms expand it to first order in ħω/E0:
//!
//! ```text
//! λ_b0 = 2 λ_p (E0/ħω) (v0/c)³                      (beat_base)
//! λ_b  = λ_b0 / [1 − (v0/c)² (1 − n²)]              (beat_planewave)
//! λ_b  = λ_b0 / [1 − (v0/c)² (1 − n² cos²α)]        (beat_tm)
//! ```
//!
//! Guided modes have n·cos α > 1, so λ_b0 bounds every guided prediction
//! from above. Larger values need n·cos α < 1, i.e. light that merely
//! crosses the slab ([`invert_radiation_angle`]).

use crate::constants::{angstrom_to_cm, HBAR_C_EV_ANGSTROM};
use crate::error::{Error, Result};
use crate::kinematics::{sidebands, ElectronBeam, LaserField};
use core::f64::consts::{FRAC_PI_2, PI};
use core::fmt;
use libm::{acos, cos, sqrt};

/// Which formula produced a [`BeatPrediction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Variant {
    /// Full relativistic sideband momenta, no expansion.
    Exact,
    /// Plane wave in a medium of index n.
    Planewave,
    /// Upper limit λ_b0 (n·cos α = 1).
    Base,
    /// Guided TM mode at internal angle α.
    TmMode,
    /// Non-guided light crossing the slab.
    RadiationMode,
}

impl Variant {
    /// Stable lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Exact => "exact",
            Variant::Planewave => "planewave",
            Variant::Base => "base",
            Variant::TmMode => "tm_mode",
            Variant::RadiationMode => "radiation_mode",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Inputs a prediction was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InputsEcho {
    /// Electron kinetic energy (eV).
    pub kinetic_energy_ev: f64,
    /// Laser vacuum wavelength (Å).
    pub vacuum_wavelength_angstrom: f64,
    /// Refractive index, when the variant uses one.
    pub refractive_index: Option<f64>,
    /// Internal propagation angle (rad), when the variant uses one.
    pub alpha_rad: Option<f64>,
    /// Transverse photon wavenumber (rad/Å), for the exact route.
    pub x_wavenumber: Option<f64>,
}

/// A beat wavelength and its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BeatPrediction {
    /// λ_b (cm).
    #[cfg_attr(feature = "serde", serde(rename = "lambda_b_cm"))]
    pub lambda_b: f64,
    /// Formula used.
    pub variant: Variant,
    /// Inputs used.
    pub inputs: InputsEcho,
}

fn echo(beam: &ElectronBeam, laser: &LaserField) -> InputsEcho {
    InputsEcho {
        kinetic_energy_ev: beam.kinetic_energy(),
        vacuum_wavelength_angstrom: laser.vacuum_wavelength(),
        ..InputsEcho::default()
    }
}

fn check_index(n: f64) -> Result<f64> {
    if n >= 1.0 && n.is_finite() {
        Ok(n)
    } else {
        Err(Error::Domain {
            quantity: "refractive_index",
            value: n,
            requirement: ">= 1",
        })
    }
}

fn base_cm(beam: &ElectronBeam, laser: &LaserField) -> f64 {
    let ratio = beam.total_energy() / laser.photon_energy();
    let beta = beam.beta();
    angstrom_to_cm(2.0 * laser.vacuum_wavelength() * ratio * beta * beta * beta)
}

/// λ_b / λ_b0 for an x-projected index `n_cos` = n·cos α.
fn mode_factor(beta: f64, n_cos: f64) -> f64 {
    1.0 / (1.0 - beta * beta * (1.0 - n_cos * n_cos))
}

/// Upper-limit beat wavelength λ_b0.
pub fn beat_base(beam: &ElectronBeam, laser: &LaserField) -> BeatPrediction {
    BeatPrediction {
        lambda_b: base_cm(beam, laser),
        variant: Variant::Base,
        inputs: echo(beam, laser),
    }
}

/// Beat wavelength for plane-wave light of index `n` ≥ 1 inside the slab.
pub fn beat_planewave(beam: &ElectronBeam, laser: &LaserField, n: f64) -> Result<BeatPrediction> {
    let n = check_index(n)?;
    Ok(BeatPrediction {
        lambda_b: base_cm(beam, laser) * mode_factor(beam.beta(), n),
        variant: Variant::Planewave,
        inputs: InputsEcho {
            refractive_index: Some(n),
            ..echo(beam, laser)
        },
    })
}

/// Beat wavelength for a slab mode whose plane-wave pair travels at ±`alpha`
/// (rad) to the slab plane.
pub fn beat_tm(
    beam: &ElectronBeam,
    laser: &LaserField,
    n: f64,
    alpha: f64,
) -> Result<BeatPrediction> {
    let n = check_index(n)?;
    if !(0.0..FRAC_PI_2).contains(&alpha) {
        return Err(Error::Domain {
            quantity: "alpha",
            value: alpha,
            requirement: "0 <= alpha < pi/2",
        });
    }
    Ok(BeatPrediction {
        lambda_b: base_cm(beam, laser) * mode_factor(beam.beta(), n * cos(alpha)),
        variant: Variant::TmMode,
        inputs: InputsEcho {
            refractive_index: Some(n),
            alpha_rad: Some(alpha),
            ..echo(beam, laser)
        },
    })
}

/// Beat wavelength from the exact sideband momenta for a photon of
/// transverse wavenumber `x_wavenumber` (rad/Å).
pub fn beat_exact(
    beam: &ElectronBeam,
    laser: &LaserField,
    x_wavenumber: f64,
) -> Result<BeatPrediction> {
    let set = sidebands(beam, laser, x_wavenumber)?;
    let lambda = 4.0 * PI * HBAR_C_EV_ANGSTROM / set.beat_momentum_c();
    Ok(BeatPrediction {
        lambda_b: angstrom_to_cm(lambda),
        variant: Variant::Exact,
        inputs: InputsEcho {
            x_wavenumber: Some(x_wavenumber),
            ..echo(beam, laser)
        },
    })
}

/// z period (Å) of the travelling optical modulation, 4πħ/(p_1z − p_−1z).
/// Infinite when ħω = 0.
pub fn optical_modulation_period(
    beam: &ElectronBeam,
    laser: &LaserField,
    x_wavenumber: f64,
) -> Result<f64> {
    let set = sidebands(beam, laser, x_wavenumber)?;
    Ok(4.0 * PI * HBAR_C_EV_ANGSTROM / set.modulation_momentum_c())
}

/// Angles that make a radiation (non-guided) mode reproduce a target beat
/// wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RadiationAngles {
    /// Internal angle α to the slab plane (rad), n·cos α < 1.
    pub alpha_internal: f64,
    /// Vacuum-side angle θ between the incoming light and the slab surface
    /// (rad), with cos θ = n·cos α.
    pub theta_external: f64,
    /// The beat prediction at `alpha_internal`.
    pub prediction: BeatPrediction,
}

/// Inverts the TM-mode formula for a target λ_b (cm) above λ_b0.
///
/// The formula depends on α only through n²cos²α = cos²θ, so it is solved in
/// closed form for cos²θ; θ itself does not depend on n.
pub fn invert_radiation_angle(
    beam: &ElectronBeam,
    laser: &LaserField,
    n: f64,
    lambda_b_target: f64,
) -> Result<RadiationAngles> {
    if !(n > 1.0 && n.is_finite()) {
        return Err(Error::Domain {
            quantity: "refractive_index",
            value: n,
            requirement: "> 1",
        });
    }
    let limit = base_cm(beam, laser);
    if lambda_b_target.is_nan() || lambda_b_target <= limit {
        return Err(Error::NotRadiationMode {
            target_cm: lambda_b_target,
            limit_cm: limit,
        });
    }
    if lambda_b_target.is_infinite() {
        return Err(Error::UnreachableTarget {
            target_cm: lambda_b_target,
        });
    }
    let beta = beam.beta();
    let cos_sq_theta = 1.0 - (1.0 - limit / lambda_b_target) / (beta * beta);
    if cos_sq_theta < 0.0 {
        return Err(Error::UnreachableTarget {
            target_cm: lambda_b_target,
        });
    }
    let cos_theta = sqrt(cos_sq_theta);
    let theta_external = acos(cos_theta);
    let alpha_internal = acos(cos_theta / n);
    let mut prediction = beat_tm(beam, laser, n, alpha_internal)?;
    prediction.variant = Variant::RadiationMode;
    Ok(RadiationAngles {
        alpha_internal,
        theta_external,
        prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{deg_to_rad, rad_to_deg};
    use crate::kinematics::{
        electron_from_kinetic, laser_from_photon_energy, laser_from_wavelength,
    };

    fn setup() -> (ElectronBeam, LaserField) {
        (
            electron_from_kinetic(50_000.0).unwrap(),
            laser_from_wavelength(4880.0).unwrap(),
        )
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn base_value() {
        let (beam, laser) = setup();
        let p = beat_base(&beam, &laser);
        assert_eq!(p.variant, Variant::Base);
        assert!((p.lambda_b - 1.515).abs() < 1e-3);
        // frozen: 2·4880·(610998.95/2.540661)·0.5482209³ Å
        let fast = electron_from_kinetic(100_000.0).unwrap();
        assert!((beat_base(&fast, &laser).lambda_b - 3.8673).abs() < 1e-3);
    }

    #[test]
    fn base_is_cubic_in_beta_at_low_energy() {
        let laser = laser_from_wavelength(4880.0).unwrap();
        let a = electron_from_kinetic(1.0).unwrap();
        let b = electron_from_kinetic(4.0).unwrap();
        // β ∝ √T at low T, E0 ≈ mc²: ratio → (b.β/a.β)³ = 8
        let ratio = beat_base(&b, &laser).lambda_b / beat_base(&a, &laser).lambda_b;
        let expected = (b.beta() / a.beta()).powi(3) * b.total_energy() / a.total_energy();
        assert!(rel(ratio, expected) < 1e-12);
        assert!((ratio - 8.0).abs() < 1e-3);
    }

    #[test]
    fn planewave_values() {
        let (beam, laser) = setup();
        assert!((beat_planewave(&beam, &laser, 1.43).unwrap().lambda_b - 1.29).abs() < 0.01);
        assert!((beat_planewave(&beam, &laser, 1.559).unwrap().lambda_b - 1.22).abs() < 0.01);
        assert_eq!(
            beat_planewave(&beam, &laser, 1.0).unwrap().lambda_b,
            beat_base(&beam, &laser).lambda_b
        );
        assert!(beat_planewave(&beam, &laser, 0.9).is_err());
    }

    #[test]
    fn tm_values() {
        let (beam, laser) = setup();
        let p = beat_tm(&beam, &laser, 1.559, deg_to_rad(46.0)).unwrap();
        assert!((p.lambda_b - 1.47).abs() < 0.01);
        assert_eq!(
            beat_tm(&beam, &laser, 1.559, 0.0).unwrap().lambda_b,
            beat_planewave(&beam, &laser, 1.559).unwrap().lambda_b
        );
        let boundary = libm::acos(1.0 / 1.3);
        assert!(
            rel(
                beat_tm(&beam, &laser, 1.3, boundary).unwrap().lambda_b,
                beat_base(&beam, &laser).lambda_b
            ) < 1e-14
        );
        assert!(beat_tm(&beam, &laser, 1.5, FRAC_PI_2).is_err());
        assert!(beat_tm(&beam, &laser, 1.5, -0.1).is_err());
    }

    #[test]
    fn exact_matches_expansions() {
        let (beam, laser) = setup();
        let k0 = laser.vacuum_wavenumber();
        let exact = beat_exact(&beam, &laser, 1.559 * k0).unwrap();
        assert_eq!(exact.variant, Variant::Exact);
        assert!(
            rel(
                exact.lambda_b,
                beat_planewave(&beam, &laser, 1.559).unwrap().lambda_b
            ) < 1e-4
        );
        let a = deg_to_rad(46.0);
        let exact_tm = beat_exact(&beam, &laser, 1.559 * k0 * libm::cos(a)).unwrap();
        assert!(
            rel(
                exact_tm.lambda_b,
                beat_tm(&beam, &laser, 1.559, a).unwrap().lambda_b
            ) < 1e-4
        );
        let beta = beam.beta();
        let no_kick = beat_base(&beam, &laser).lambda_b / (1.0 - beta * beta);
        let exact0 = beat_exact(&beam, &laser, 0.0).unwrap().lambda_b;
        assert!(rel(exact0, no_kick) < 1e-4);
        // 1.515 / (1 − 0.4127²) ≈ 1.8256 cm
        assert!((exact0 - 1.8256).abs() < 1e-3);
    }

    #[test]
    fn radiation_inversion() {
        let (beam, laser) = setup();
        let low = invert_radiation_angle(&beam, &laser, 1.559, 1.70).unwrap();
        let high = invert_radiation_angle(&beam, &laser, 1.559, 1.75).unwrap();
        assert!((rad_to_deg(low.theta_external) - 53.0).abs() < 1.0);
        assert!((rad_to_deg(high.theta_external) - 63.0).abs() < 1.0);
        assert_eq!(low.prediction.variant, Variant::RadiationMode);
        assert!(rel(low.prediction.lambda_b, 1.70) < 1e-10);
        assert!(1.559 * libm::cos(low.alpha_internal) < 1.0);

        let limit = beat_base(&beam, &laser).lambda_b;
        let grazing = invert_radiation_angle(&beam, &laser, 1.559, limit * (1.0 + 1e-12)).unwrap();
        assert!(grazing.theta_external < 1e-4);

        assert!(matches!(
            invert_radiation_angle(&beam, &laser, 1.559, 1.4),
            Err(Error::NotRadiationMode { .. })
        ));
        assert!(matches!(
            invert_radiation_angle(&beam, &laser, 1.559, 100.0),
            Err(Error::UnreachableTarget { .. })
        ));
        assert!(invert_radiation_angle(&beam, &laser, 1.0, 1.7).is_err());
    }

    #[test]
    fn theta_does_not_depend_on_index() {
        let (beam, laser) = setup();
        let a = invert_radiation_angle(&beam, &laser, 1.43, 1.73).unwrap();
        let b = invert_radiation_angle(&beam, &laser, 2.2, 1.73).unwrap();
        assert_eq!(a.theta_external, b.theta_external);
        assert!(a.alpha_internal != b.alpha_internal);
    }

    #[test]
    fn modulation_period() {
        let (beam, laser) = setup();
        let period = optical_modulation_period(&beam, &laser, 0.0).unwrap();
        let expansion = beam.beta() * laser.vacuum_wavelength();
        assert!(rel(period, expansion) < 1e-3);
        assert!((period - 2014.0).abs() < 1.0);
        let dark = laser_from_photon_energy(0.0).unwrap();
        assert!(optical_modulation_period(&beam, &dark, 0.0)
            .unwrap()
            .is_infinite());
        let tiny = laser_from_photon_energy(1e-6).unwrap();
        assert!(optical_modulation_period(&beam, &tiny, 0.0).unwrap() > 1e9);
    }
}
