//! Relativistic electron state, laser photons and photon-exchange sidebands.
//!
//! An electron of total energy E0 moving along +z absorbs or emits one photon
//! inside the film. Energy conservation gives `E_n = E0 + n·ħω` and
//! conservation of the x quasimomentum gives `p_nx = n·ħk`; the mass shell
//! then fixes the longitudinal momentum `p_nz`. All momenta are carried as
//! `p·c` in eV.

use crate::constants::{
    ELECTRON_REST_ENERGY_EV, HBAR_C_EV_ANGSTROM, HC_EV_ANGSTROM, SPEED_OF_LIGHT_ANGSTROM_PER_S,
};
use crate::error::{require_positive, Error, Result};
use core::f64::consts::PI;
use libm::sqrt;

/// Relativistic state of the incident electron.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ElectronBeam {
    kinetic_energy: f64,
    rest_energy: f64,
    total_energy: f64,
    momentum_c: f64,
    beta: f64,
}

impl ElectronBeam {
    /// Kinetic energy E0 − mc² (eV).
    pub fn kinetic_energy(&self) -> f64 {
        self.kinetic_energy
    }

    /// Rest energy mc² (eV).
    pub fn rest_energy(&self) -> f64 {
        self.rest_energy
    }

    /// Total energy E0 (eV).
    pub fn total_energy(&self) -> f64 {
        self.total_energy
    }

    /// Momentum times c, p0·c (eV).
    pub fn momentum_c(&self) -> f64 {
        self.momentum_c
    }

    /// Speed ratio v0/c.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Lorentz factor E0/mc².
    pub fn gamma(&self) -> f64 {
        self.total_energy / self.rest_energy
    }
}

/// Builds the electron state for a given kinetic energy (eV).
pub fn electron_from_kinetic(kinetic_energy: f64) -> Result<ElectronBeam> {
    let kinetic_energy = require_positive("kinetic_energy", kinetic_energy)?;
    let rest_energy = ELECTRON_REST_ENERGY_EV;
    let total_energy = rest_energy + kinetic_energy;
    // (E0 − mc²)(E0 + mc²) keeps full precision at small kinetic energy
    let momentum_c = sqrt(kinetic_energy * (total_energy + rest_energy));
    Ok(ElectronBeam {
        kinetic_energy,
        rest_energy,
        total_energy,
        momentum_c,
        beta: momentum_c / total_energy,
    })
}

/// Monochromatic laser light, described by its vacuum wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LaserField {
    vacuum_wavelength: f64,
    photon_energy: f64,
    angular_frequency: f64,
    vacuum_wavenumber: f64,
}

impl LaserField {
    /// Vacuum wavelength λ_p (Å). Infinite for the photon-free limit.
    pub fn vacuum_wavelength(&self) -> f64 {
        self.vacuum_wavelength
    }

    /// Photon energy ħω (eV).
    pub fn photon_energy(&self) -> f64 {
        self.photon_energy
    }

    /// Angular frequency ω (rad/s).
    pub fn angular_frequency(&self) -> f64 {
        self.angular_frequency
    }

    /// Vacuum wavenumber k0 = 2π/λ_p (rad/Å).
    pub fn vacuum_wavenumber(&self) -> f64 {
        self.vacuum_wavenumber
    }

    /// Optical period 2π/ω (s).
    pub fn period(&self) -> f64 {
        2.0 * PI / self.angular_frequency
    }
}

/// Builds the laser description from its vacuum wavelength (Å).
pub fn laser_from_wavelength(vacuum_wavelength: f64) -> Result<LaserField> {
    let vacuum_wavelength = require_positive("vacuum_wavelength", vacuum_wavelength)?;
    let vacuum_wavenumber = 2.0 * PI / vacuum_wavelength;
    Ok(LaserField {
        vacuum_wavelength,
        photon_energy: HC_EV_ANGSTROM / vacuum_wavelength,
        angular_frequency: SPEED_OF_LIGHT_ANGSTROM_PER_S * vacuum_wavenumber,
        vacuum_wavenumber,
    })
}

/// Builds the laser description from a photon energy (eV).
///
/// Unlike [`laser_from_wavelength`] this accepts `photon_energy = 0`, the
/// degenerate no-exchange limit in which all three sidebands coincide.
pub fn laser_from_photon_energy(photon_energy: f64) -> Result<LaserField> {
    if !(photon_energy >= 0.0 && photon_energy.is_finite()) {
        return Err(Error::Domain {
            quantity: "photon_energy",
            value: photon_energy,
            requirement: "finite and >= 0",
        });
    }
    let vacuum_wavenumber = photon_energy / HBAR_C_EV_ANGSTROM;
    Ok(LaserField {
        vacuum_wavelength: HC_EV_ANGSTROM / photon_energy,
        photon_energy,
        angular_frequency: SPEED_OF_LIGHT_ANGSTROM_PER_S * vacuum_wavenumber,
        vacuum_wavenumber,
    })
}

/// One outgoing electron plane wave.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sideband {
    /// Photon-exchange order n.
    pub order: i8,
    /// E_n (eV).
    pub energy: f64,
    /// p_nx·c (eV).
    pub px_c: f64,
    /// p_nz·c (eV), non-negative.
    pub pz_c: f64,
    /// (p_nz − p_0z)·c (eV), evaluated without cancellation.
    pub pz_shift_c: f64,
}

/// The three sidebands n = −1, 0, +1 for one beam, laser and x wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SidebandSet {
    members: [Sideband; 3],
    x_wavenumber: f64,
}

impl SidebandSet {
    /// Sideband of order `n` ∈ {−1, 0, 1}.
    ///
    /// # Panics
    ///
    /// If `n` is not one of −1, 0, 1.
    pub fn get(&self, n: i8) -> &Sideband {
        assert!((-1..=1).contains(&n), "sideband order must be -1, 0 or 1");
        &self.members[(n + 1) as usize]
    }

    /// All three members, ordered n = −1, 0, +1.
    pub fn members(&self) -> &[Sideband; 3] {
        &self.members
    }

    /// Transverse wavenumber k used for the photon kick (rad/Å).
    pub fn x_wavenumber(&self) -> f64 {
        self.x_wavenumber
    }

    /// (2p_0 − p_1z − p_−1z)·c (eV), the stationary beat momentum.
    pub fn beat_momentum_c(&self) -> f64 {
        -(self.get(1).pz_shift_c + self.get(-1).pz_shift_c)
    }

    /// (p_1z − p_−1z)·c (eV), the travelling optical-modulation momentum.
    pub fn modulation_momentum_c(&self) -> f64 {
        self.get(1).pz_shift_c - self.get(-1).pz_shift_c
    }
}

/// Builds the sidebands produced by exchanging one photon with transverse
/// wavenumber `x_wavenumber` (rad/Å).
///
/// Use `n·k0` for a plane wave in a medium of index n and `n·k0·cos α` for a
/// slab mode.
pub fn sidebands(
    beam: &ElectronBeam,
    laser: &LaserField,
    x_wavenumber: f64,
) -> Result<SidebandSet> {
    if !(x_wavenumber >= 0.0 && x_wavenumber.is_finite()) {
        return Err(Error::Domain {
            quantity: "x_wavenumber",
            value: x_wavenumber,
            requirement: "finite and >= 0",
        });
    }
    let e0 = beam.total_energy();
    let p0 = beam.momentum_c();
    let rest = beam.rest_energy();
    let hw = laser.photon_energy();
    let kick = HBAR_C_EV_ANGSTROM * x_wavenumber;

    let make = |n: i8| -> Result<Sideband> {
        let nf = f64::from(n);
        let energy = e0 + nf * hw;
        let px_c = nf * kick;
        // p_nz² − p_0² = E_n² − E0² − p_nx², expanded exactly
        let excess = nf * hw * (2.0 * e0 + nf * hw) - px_c * px_c;
        let pz_sq = p0 * p0 + excess;
        if pz_sq < 0.0 || energy < rest {
            return Err(Error::EvanescentSideband { order: n });
        }
        let pz_c = if n == 0 { p0 } else { sqrt(pz_sq) };
        let pz_shift_c = if n == 0 { 0.0 } else { excess / (pz_c + p0) };
        Ok(Sideband {
            order: n,
            energy,
            px_c,
            pz_c,
            pz_shift_c,
        })
    };

    Ok(SidebandSet {
        members: [make(-1)?, make(0)?, make(1)?],
        x_wavenumber,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shell_residual(s: &Sideband, rest: f64) -> f64 {
        let lhs = s.energy * s.energy;
        let rhs = rest * rest + s.px_c * s.px_c + s.pz_c * s.pz_c;
        (lhs - rhs).abs() / lhs
    }

    #[test]
    fn fifty_kev_beam() {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        assert!((beam.beta() - 0.4127).abs() < 1e-4);
        assert!((beam.total_energy() - 560_998.95).abs() < 1e-9);
        // sqrt(E0² − mc⁴) evaluated directly
        assert!((beam.momentum_c() / 1e3 - 231.517).abs() < 5e-4);
        let e = beam.total_energy();
        let shell =
            (e * e - beam.rest_energy().powi(2) - beam.momentum_c().powi(2)).abs() / (e * e);
        assert!(shell < 1e-12);
    }

    #[test]
    fn rest_limit() {
        let beam = electron_from_kinetic(1e-6).unwrap();
        assert!(beam.beta() < 1e-5);
        assert!((beam.total_energy() - ELECTRON_REST_ENERGY_EV).abs() < 1e-5);
    }

    #[test]
    fn rejects_non_positive_inputs() {
        assert!(matches!(
            electron_from_kinetic(0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            electron_from_kinetic(-5.0),
            Err(Error::Domain { .. })
        ));
        assert!(electron_from_kinetic(f64::NAN).is_err());
        assert!(matches!(
            laser_from_wavelength(0.0),
            Err(Error::Domain { .. })
        ));
        assert!(laser_from_photon_energy(-1.0).is_err());
    }

    #[test]
    fn argon_line() {
        let laser = laser_from_wavelength(4880.0).unwrap();
        assert!((laser.photon_energy() - 2.5407).abs() < 1e-4);
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let ratio = beam.total_energy() / laser.photon_energy();
        assert!((ratio / 1e5 - 2.208).abs() < 1e-3);
        let doubled = laser_from_wavelength(9760.0).unwrap();
        assert!((doubled.photon_energy() * 2.0 - laser.photon_energy()).abs() < 1e-12);
    }

    #[test]
    fn zero_kick_sidebands() {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let laser = laser_from_wavelength(4880.0).unwrap();
        let set = sidebands(&beam, &laser, 0.0).unwrap();
        assert_eq!(set.get(0).pz_c, beam.momentum_c());
        for s in set.members() {
            assert!(shell_residual(s, beam.rest_energy()) < 1e-12);
            assert_eq!(s.px_c, 0.0);
        }
        assert!(set.get(1).pz_c > set.get(0).pz_c);
        assert!(set.get(0).pz_c > set.get(-1).pz_c);
    }

    #[test]
    fn degenerate_laser_collapses_sidebands() {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let laser = laser_from_photon_energy(0.0).unwrap();
        let set = sidebands(&beam, &laser, 0.0).unwrap();
        for s in set.members() {
            assert_eq!(s.energy, beam.total_energy());
            assert_eq!(s.pz_c, beam.momentum_c());
        }
        assert_eq!(set.beat_momentum_c(), 0.0);
    }

    #[test]
    fn evanescent_when_kick_exceeds_shell() {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let laser = laser_from_wavelength(4880.0).unwrap();
        // transverse kick larger than the whole momentum
        let k = 2.0 * beam.momentum_c() / HBAR_C_EV_ANGSTROM;
        assert!(matches!(
            sidebands(&beam, &laser, k),
            Err(Error::EvanescentSideband { .. })
        ));
        assert!(sidebands(&beam, &laser, -1.0).is_err());
    }

    #[test]
    fn shifts_match_direct_subtraction() {
        let beam = electron_from_kinetic(50_000.0).unwrap();
        let laser = laser_from_wavelength(4880.0).unwrap();
        let set = sidebands(&beam, &laser, 1.559 * laser.vacuum_wavenumber()).unwrap();
        for n in [-1, 1] {
            let s = set.get(n);
            let direct = s.pz_c - set.get(0).pz_c;
            assert!((direct - s.pz_shift_c).abs() < 1e-8 * s.pz_shift_c.abs());
            assert_eq!(
                s.px_c,
                f64::from(n) * HBAR_C_EV_ANGSTROM * set.x_wavenumber()
            );
        }
    }
}
