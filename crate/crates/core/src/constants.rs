//! Physical constants and unit conversions.
//!
//! Energies are in eV and lengths in Å. The table is read-only and can be
//! dumped for provenance via [`TABLE`].

use core::f64::consts::PI;

/// Electron rest energy mc² (eV).
pub const ELECTRON_REST_ENERGY_EV: f64 = 510_998.95;

/// hc (eV·Å).
pub const HC_EV_ANGSTROM: f64 = 12_398.42;

/// ħc (eV·Å).
pub const HBAR_C_EV_ANGSTROM: f64 = HC_EV_ANGSTROM / (2.0 * PI);

/// Speed of light (Å/s).
pub const SPEED_OF_LIGHT_ANGSTROM_PER_S: f64 = 2.997_924_58e18;

/// Å per cm.
pub const ANGSTROM_PER_CM: f64 = 1.0e8;

/// eV per keV.
pub const EV_PER_KEV: f64 = 1.0e3;

/// One row of the constant table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Constant {
    /// Machine name.
    pub name: &'static str,
    /// Symbol as usually written.
    pub symbol: &'static str,
    /// Value in `unit`.
    pub value: f64,
    /// Unit string.
    pub unit: &'static str,
    /// Where the value comes from.
    pub source: &'static str,
}

/// Every constant the model uses.
pub const TABLE: [Constant; 6] = [
    Constant {
        name: "electron_rest_energy",
        symbol: "mc^2",
        value: ELECTRON_REST_ENERGY_EV,
        unit: "eV",
        source: "CODATA 2018",
    },
    Constant {
        name: "planck_times_c",
        symbol: "hc",
        value: HC_EV_ANGSTROM,
        unit: "eV*Angstrom",
        source: "CODATA 2018, rounded to 7 significant digits",
    },
    Constant {
        name: "reduced_planck_times_c",
        symbol: "hbar*c",
        value: HBAR_C_EV_ANGSTROM,
        unit: "eV*Angstrom",
        source: "derived: hc / 2pi",
    },
    Constant {
        name: "speed_of_light",
        symbol: "c",
        value: SPEED_OF_LIGHT_ANGSTROM_PER_S,
        unit: "Angstrom/s",
        source: "SI exact",
    },
    Constant {
        name: "angstrom_per_cm",
        symbol: "",
        value: ANGSTROM_PER_CM,
        unit: "Angstrom/cm",
        source: "SI exact",
    },
    Constant {
        name: "ev_per_kev",
        symbol: "",
        value: EV_PER_KEV,
        unit: "eV/keV",
        source: "SI exact",
    },
];

/// Å → cm.
pub fn angstrom_to_cm(length: f64) -> f64 {
    length / ANGSTROM_PER_CM
}

/// cm → Å.
pub fn cm_to_angstrom(length: f64) -> f64 {
    length * ANGSTROM_PER_CM
}

/// Degrees → radians.
pub fn deg_to_rad(angle: f64) -> f64 {
    angle * PI / 180.0
}

/// Radians → degrees.
pub fn rad_to_deg(angle: f64) -> f64 {
    angle * 180.0 / PI
}
