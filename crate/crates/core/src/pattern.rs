//! Electron probability density behind the film, to first order in the
//! light field:
//!
//! ```text
//! ρ/ρ0 = 1 − β · S(z·Φ_b) · sin(πd/2d0) · cos(kx − ωt + z·Φ_o)
//! Φ_b  = (2p_0 − p_1z − p_−1z) / 2ħ
//! Φ_o  = (p_1z − p_−1z) / 2ħ
//! ```
//!
//! `S` is `sin` for the first-order theory and `cos` for the phase the
//! measurements point to (intensity maximum at the exit face z = 0).
//! Lengths: x in Å, z in cm, t in s.

use crate::constants::{angstrom_to_cm, cm_to_angstrom, HBAR_C_EV_ANGSTROM};
use crate::error::{require_positive, Error, Result};
use crate::kinematics::{sidebands, ElectronBeam, LaserField};
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{ceil, cos, fabs, sin};

/// Points per beat wavelength in the coarse extremum scan.
const SCAN_POINTS_PER_PERIOD: f64 = 1000.0;
/// Golden-section stopping width, relative to λ_b.
const REFINE_TOLERANCE: f64 = 1e-9;
/// Hard cap on coarse scan points.
const MAX_SCAN_POINTS: f64 = 1e8;

/// Initial phase of the stationary z modulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PhaseConvention {
    /// `sin(z·Φ_b)`: no modulation at the exit face.
    #[default]
    SineTheory,
    /// `cos(z·Φ_b)`: maximal modulation at the exit face.
    CosineExperiment,
}

impl PhaseConvention {
    fn stationary(self, phase: f64) -> f64 {
        match self {
            PhaseConvention::SineTheory => sin(phase),
            PhaseConvention::CosineExperiment => cos(phase),
        }
    }
}

/// Inputs to the density model. Caches the sideband phase rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternParams {
    beta_mod: f64,
    thickness: f64,
    optimum_thickness: f64,
    beam: ElectronBeam,
    laser: LaserField,
    x_wavenumber: f64,
    phase_convention: PhaseConvention,
    beat_rate: f64,
    modulation_rate: f64,
}

impl PatternParams {
    /// `beta_mod` ∈ [0, 1] is the modulation depth, `thickness` and
    /// `optimum_thickness` (d, d0) are in Å, `x_wavenumber` in rad/Å.
    pub fn new(
        beta_mod: f64,
        thickness: f64,
        optimum_thickness: f64,
        beam: ElectronBeam,
        laser: LaserField,
        x_wavenumber: f64,
        phase_convention: PhaseConvention,
    ) -> Result<Self> {
        if !(0.0..=1.0).contains(&beta_mod) {
            return Err(Error::Domain {
                quantity: "beta_mod",
                value: beta_mod,
                requirement: "0 <= beta <= 1",
            });
        }
        let thickness = require_positive("thickness", thickness)?;
        let optimum_thickness = require_positive("optimum_thickness", optimum_thickness)?;
        let set = sidebands(&beam, &laser, x_wavenumber)?;
        Ok(PatternParams {
            beta_mod,
            thickness,
            optimum_thickness,
            beam,
            laser,
            x_wavenumber,
            phase_convention,
            beat_rate: set.beat_momentum_c() / (2.0 * HBAR_C_EV_ANGSTROM),
            modulation_rate: set.modulation_momentum_c() / (2.0 * HBAR_C_EV_ANGSTROM),
        })
    }

    /// Same parameters with a different phase convention.
    pub fn with_phase_convention(mut self, phase_convention: PhaseConvention) -> Self {
        self.phase_convention = phase_convention;
        self
    }

    /// Modulation depth β.
    pub fn beta_mod(&self) -> f64 {
        self.beta_mod
    }

    /// Slab thickness d (Å).
    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    /// Optimum thickness d0 (Å).
    pub fn optimum_thickness(&self) -> f64 {
        self.optimum_thickness
    }

    /// Incident electron.
    pub fn beam(&self) -> &ElectronBeam {
        &self.beam
    }

    /// Laser light.
    pub fn laser(&self) -> &LaserField {
        &self.laser
    }

    /// Transverse photon wavenumber k (rad/Å).
    pub fn x_wavenumber(&self) -> f64 {
        self.x_wavenumber
    }

    /// Phase convention of the stationary factor.
    pub fn phase_convention(&self) -> PhaseConvention {
        self.phase_convention
    }

    /// Beat wavelength 2π/Φ_b (cm); infinite when ħω = 0.
    pub fn beat_wavelength_cm(&self) -> f64 {
        angstrom_to_cm(2.0 * PI / self.beat_rate)
    }
}

/// One evaluated point of the density.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PatternSample {
    /// x (Å).
    pub x: f64,
    /// z (cm).
    pub z: f64,
    /// t (s).
    pub t: f64,
    /// ρ/ρ0.
    pub rho_ratio: f64,
}

/// Photon-exchange probability factor sin(πd / 2d0).
pub fn thickness_factor(d: f64, d0: f64) -> f64 {
    sin(PI * d / (2.0 * d0))
}

fn check_z(z: f64) -> Result<f64> {
    if z >= 0.0 && z.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain {
            quantity: "z",
            value: z,
            requirement: "finite and >= 0",
        })
    }
}

/// ρ/ρ0 at (x Å, z cm, t s). Requires z ≥ 0.
pub fn density(params: &PatternParams, x: f64, z: f64, t: f64) -> Result<PatternSample> {
    let z = check_z(z)?;
    let z_a = cm_to_angstrom(z);
    let stationary = params.phase_convention.stationary(z_a * params.beat_rate);
    let travelling = cos(
        params.x_wavenumber * x - params.laser.angular_frequency() * t
            + z_a * params.modulation_rate,
    );
    let factor = thickness_factor(params.thickness, params.optimum_thickness);
    Ok(PatternSample {
        x,
        z,
        t,
        rho_ratio: 1.0 - params.beta_mod * stationary * factor * travelling,
    })
}

/// Local modulation amplitude at z (cm), maximized over x and t.
pub fn envelope(params: &PatternParams, z: f64) -> Result<f64> {
    let z = check_z(z)?;
    Ok(envelope_unchecked(params, z))
}

fn envelope_unchecked(params: &PatternParams, z: f64) -> f64 {
    let stationary = params
        .phase_convention
        .stationary(cm_to_angstrom(z) * params.beat_rate);
    params.beta_mod
        * fabs(stationary)
        * fabs(thickness_factor(params.thickness, params.optimum_thickness))
}

/// Positions (cm) and amplitudes of the envelope maxima in [0, `z_max`],
/// sorted by z.
///
/// Scans at λ_b/1000 and refines every bracketed maximum by golden-section
/// search. Returns no maxima when the envelope is flat (β = 0, ħω = 0, or a
/// thickness factor of zero).
pub fn envelope_extrema(params: &PatternParams, z_max: f64) -> Result<Vec<(f64, f64)>> {
    let z_max = require_positive("z_max", z_max)?;
    let period = params.beat_wavelength_cm();
    let peak = envelope_unchecked(params, 0.0).max(envelope_unchecked(params, period / 4.0));
    if !period.is_finite() || peak == 0.0 {
        return Ok(Vec::new());
    }
    let step = period / SCAN_POINTS_PER_PERIOD;
    let intervals = ceil(z_max / step);
    if intervals > MAX_SCAN_POINTS {
        return Err(Error::Domain {
            quantity: "z_max",
            value: z_max,
            requirement: "at most 1e5 beat wavelengths",
        });
    }
    let intervals = intervals as usize;
    let at = |i: usize| (i as f64 * step).min(z_max);
    let f = |z: f64| envelope_unchecked(params, z);
    let tolerance = REFINE_TOLERANCE * period;

    let mut maxima = Vec::new();
    let mut prev = f(at(0));
    let mut here = f(at(1));
    if prev >= here {
        let z = golden_max(&f, 0.0, at(1), tolerance);
        let z = if z < tolerance { 0.0 } else { z };
        maxima.push((z, f(z)));
    }
    for i in 1..intervals {
        let next = f(at(i + 1));
        if here > prev && here >= next {
            let z = golden_max(&f, at(i - 1), at(i + 1), tolerance);
            maxima.push((z, f(z)));
        }
        prev = here;
        here = next;
    }
    Ok(maxima)
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, tolerance: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tolerance {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beating::{beat_exact, beat_tm};
    use crate::kinematics::{electron_from_kinetic, laser_from_wavelength};
    use crate::waveguide::{solve_tm_mode, Slab};

    fn quartz_tm0(convention: PhaseConvention) -> PatternParams {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let laser = laser_from_wavelength(4880.0).unwrap();
        let slab = Slab::new(1000.0, 1.559, "SiO2").unwrap();
        let mode = solve_tm_mode(&slab, &laser, 0).unwrap();
        let k = mode.effective_index * laser.vacuum_wavenumber();
        PatternParams::new(0.35, 1000.0, 1007.0, beam, laser, k, convention).unwrap()
    }

    #[test]
    fn thickness_factor_values() {
        assert_eq!(thickness_factor(1007.0, 1007.0), 1.0);
        assert!(thickness_factor(2014.0, 1007.0).abs() < 1e-15);
        assert!((thickness_factor(1000.0, 1007.0) - 0.999_940).abs() < 1e-6);
    }

    #[test]
    fn exit_face_under_both_conventions() {
        let p = quartz_tm0(PhaseConvention::SineTheory);
        for (x, t) in [(0.0, 0.0), (123.0, 1e-15), (-5e3, 3.3e-16)] {
            assert_eq!(density(&p, x, 0.0, t).unwrap().rho_ratio, 1.0);
        }
        let beam = *p.beam();
        let laser = *p.laser();
        let c = PatternParams::new(
            0.35,
            1007.0,
            1007.0,
            beam,
            laser,
            p.x_wavenumber(),
            PhaseConvention::CosineExperiment,
        )
        .unwrap();
        assert!((density(&c, 0.0, 0.0, 0.0).unwrap().rho_ratio - 0.65).abs() < 1e-15);
        assert_eq!(envelope(&p, 0.0).unwrap(), 0.0);
        assert_eq!(envelope(&c, 0.0).unwrap(), 0.35);
    }

    #[test]
    fn no_field_no_modulation() {
        let p = quartz_tm0(PhaseConvention::CosineExperiment);
        let flat = PatternParams::new(
            0.0,
            1000.0,
            1007.0,
            *p.beam(),
            *p.laser(),
            p.x_wavenumber(),
            PhaseConvention::CosineExperiment,
        )
        .unwrap();
        for z in [0.0, 0.3, 1.7] {
            assert_eq!(density(&flat, 10.0, z, 1e-16).unwrap().rho_ratio, 1.0);
        }
        assert!(envelope_extrema(&flat, 5.0).unwrap().is_empty());
    }

    #[test]
    fn envelope_quarter_and_half_period() {
        let p = quartz_tm0(PhaseConvention::SineTheory);
        let lb = p.beat_wavelength_cm();
        let quarter = envelope(&p, lb / 4.0).unwrap();
        assert!((quarter - 0.35 * thickness_factor(1000.0, 1007.0)).abs() < 1e-12);
        assert!(envelope(&p, lb / 2.0).unwrap() < 1e-10);
        assert!(envelope(&p, -1e-3).is_err());
        assert!(density(&p, 0.0, -1.0, 0.0).is_err());
    }

    #[test]
    fn beat_wavelength_matches_exact_route() {
        let p = quartz_tm0(PhaseConvention::SineTheory);
        let exact = beat_exact(p.beam(), p.laser(), p.x_wavenumber()).unwrap();
        assert!((p.beat_wavelength_cm() - exact.lambda_b).abs() < 1e-12 * exact.lambda_b);
        let tm = beat_tm(
            p.beam(),
            p.laser(),
            1.559,
            libm::acos(p.x_wavenumber() / (1.559 * p.laser().vacuum_wavenumber())),
        )
        .unwrap();
        assert!((tm.lambda_b - 1.4728).abs() < 1e-3);
    }

    #[test]
    fn extrema_positions() {
        let p = quartz_tm0(PhaseConvention::SineTheory);
        let lb = p.beat_wavelength_cm();
        let maxima = envelope_extrema(&p, 5.0).unwrap();
        assert!((maxima[0].0 - 0.368).abs() < 1e-3);
        assert!((maxima[0].0 - lb / 4.0).abs() < 1e-8 * lb);
        for pair in maxima.windows(2) {
            assert!(((pair[1].0 - pair[0].0) - lb / 2.0).abs() < 1e-6 * lb);
        }
        assert_eq!(maxima.len(), 7);

        let c = p.with_phase_convention(PhaseConvention::CosineExperiment);
        let maxima = envelope_extrema(&c, 5.0).unwrap();
        assert_eq!(maxima[0].0, 0.0);
        assert!(envelope_extrema(&c, 0.0).is_err());
    }
}
