//! TM modes of a symmetric, vacuum-clad dielectric slab.
//!
//! A guided TM mode is a pair of plane waves bouncing at ±α to the slab
//! plane (the x axis). With κ = n·k0·sin α the transverse wavenumber inside
//! and γ = k0·√(n²cos²α − 1) the decay rate outside, mode m satisfies
//!
//! ```text
//! tan(κd/2 − mπ/2) = n²γ/κ
//! ```
//!
//! which is solved here in its phase form
//! `κd/2 − mπ/2 − atan(n²γ/κ) = 0`. The phase form is pole-free and strictly
//! increasing in α on the guided interval `0 < α < arccos(1/n)`, so each
//! mode has exactly one root there.

use crate::error::{require_positive, Error, Result};
use crate::kinematics::LaserField;
use alloc::string::String;
use core::f64::consts::FRAC_PI_2;
use libm::{acos, atan, cos, sin, sqrt};

/// Gap kept between the bisection bracket and grazing incidence (rad).
pub const BRACKET_MARGIN: f64 = 1e-9;
const RELATIVE_TOLERANCE: f64 = 1e-12;
const MAX_ITERATIONS: usize = 200;
const RESIDUAL_TOLERANCE: f64 = 1e-13;

/// A dielectric film of given thickness (Å) and refractive index.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Slab {
    thickness: f64,
    refractive_index: f64,
    material: String,
}

impl Slab {
    /// Requires `thickness > 0` and `refractive_index > 1`.
    pub fn new(thickness: f64, refractive_index: f64, material: impl Into<String>) -> Result<Self> {
        let thickness = require_positive("thickness", thickness)?;
        check_index(refractive_index)?;
        Ok(Slab {
            thickness,
            refractive_index,
            material: material.into(),
        })
    }

    /// Thickness d (Å).
    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    /// Refractive index n at the laser wavelength.
    pub fn refractive_index(&self) -> f64 {
        self.refractive_index
    }

    /// Material label.
    pub fn material(&self) -> &str {
        &self.material
    }

    /// Largest guided internal angle, arccos(1/n) (rad).
    pub fn critical_alpha(&self) -> f64 {
        acos(1.0 / self.refractive_index)
    }
}

fn check_index(n: f64) -> Result<f64> {
    if n > 1.0 && n.is_finite() {
        Ok(n)
    } else {
        Err(Error::Domain {
            quantity: "refractive_index",
            value: n,
            requirement: "> 1",
        })
    }
}

/// A guided TM mode.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ModeSolution {
    /// Mode index m.
    pub mode_index: u32,
    /// Internal propagation angle α to the x axis (rad).
    pub alpha: f64,
    /// Transverse wavenumber inside the slab, n·k0·sin α (rad/Å).
    pub kappa: f64,
    /// Evanescent decay rate outside, k0·√(n²cos²α − 1) (rad/Å).
    pub gamma: f64,
    /// Normalized dispersion mismatch at `alpha`.
    pub residual: f64,
    /// n·cos α; exceeds 1 for every guided mode.
    pub effective_index: f64,
}

/// Thickness (Å) above which TM_m is guided: m·λ_p / (2√(n² − 1)).
///
/// TM0 has no cutoff and returns 0.
pub fn tm_cutoff_thickness(
    laser: &LaserField,
    refractive_index: f64,
    mode_index: u32,
) -> Result<f64> {
    let n = check_index(refractive_index)?;
    Ok(f64::from(mode_index) * laser.vacuum_wavelength() / (2.0 * sqrt(n * n - 1.0)))
}

/// Number of guided TM modes. A thickness exactly at a cutoff does not guide
/// the new mode.
pub fn tm_mode_count(slab: &Slab, laser: &LaserField) -> u32 {
    let mut count = 1;
    while tm_cutoff_thickness(laser, slab.refractive_index, count)
        .map(|cut| cut < slab.thickness)
        .unwrap_or(false)
    {
        count += 1;
    }
    count
}

fn phase_mismatch(alpha: f64, slab: &Slab, laser: &LaserField, mode_index: u32) -> f64 {
    let n = slab.refractive_index;
    let k0 = laser.vacuum_wavenumber();
    let kappa = n * k0 * sin(alpha);
    let gamma = k0 * sqrt((n * n * cos(alpha) * cos(alpha) - 1.0).max(0.0));
    let phase = kappa * slab.thickness / 2.0 - f64::from(mode_index) * FRAC_PI_2;
    (phase - atan(n * n * gamma / kappa)) / FRAC_PI_2
}

/// Signed, normalized mismatch of the TM dispersion relation at
/// `candidate_alpha` (rad). Zero exactly at a TM_m mode; negative below it.
pub fn dispersion_residual(
    candidate_alpha: f64,
    slab: &Slab,
    laser: &LaserField,
    mode_index: u32,
) -> Result<f64> {
    if !(candidate_alpha > 0.0 && candidate_alpha < slab.critical_alpha()) {
        return Err(Error::Domain {
            quantity: "candidate_alpha",
            value: candidate_alpha,
            requirement: "0 < alpha < arccos(1/n)",
        });
    }
    Ok(phase_mismatch(candidate_alpha, slab, laser, mode_index))
}

/// Bracketing interval used by [`solve_tm_mode`].
///
/// The upper end is the critical angle itself, where γ = 0 and the mismatch
/// is positive for every guided mode; backing off from it would lose roots
/// of modes just above cutoff.
pub fn solver_bracket(slab: &Slab) -> (f64, f64) {
    (BRACKET_MARGIN, slab.critical_alpha())
}

/// Solves the TM_m dispersion relation for the internal angle α by bisection.
pub fn solve_tm_mode(slab: &Slab, laser: &LaserField, mode_index: u32) -> Result<ModeSolution> {
    let guided = tm_mode_count(slab, laser);
    if mode_index >= guided {
        return Err(Error::NoSuchMode { mode_index, guided });
    }
    let f = |a: f64| phase_mismatch(a, slab, laser, mode_index);
    let (mut lo, mut hi) = solver_bracket(slab);
    let (mut f_lo, mut f_hi) = (f(lo), f(hi));
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::Numerical("TM dispersion root not bracketed"));
    }
    // bisect past the angular tolerance until the mismatch itself is small,
    // or the bracket is exhausted at double precision
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid < 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if hi - lo <= RELATIVE_TOLERANCE * mid && f_lo.abs().min(f_hi) <= RESIDUAL_TOLERANCE {
            break;
        }
    }
    let alpha = if f_hi <= -f_lo { hi } else { lo };
    let n = slab.refractive_index;
    let k0 = laser.vacuum_wavenumber();
    let effective_index = n * cos(alpha);
    if effective_index <= 1.0 {
        return Err(Error::Numerical(
            "TM root violates total internal reflection",
        ));
    }
    Ok(ModeSolution {
        mode_index,
        alpha,
        kappa: n * k0 * sin(alpha),
        gamma: k0 * sqrt(effective_index * effective_index - 1.0),
        residual: f(alpha),
        effective_index,
    })
}
