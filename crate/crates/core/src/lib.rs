//! Long beating wavelength of laser-modulated electron beams behind a thin
//! dielectric film.
//!
//! The crate is `no_std` (it needs `alloc` only for [`pattern::envelope_extrema`])
//! and covers four layers, each usable on its own:
//!
//! * [`kinematics`]: relativistic electron state, laser photon, and the
//!   `n = 0, ±1` sidebands produced by photon exchange inside the film.
//! * [`waveguide`]: TM-mode structure of a vacuum-clad symmetric slab
//!   (cutoffs, mode counting, the internal propagation angle).
//! * [`beating`]: the stationary beat wavelength λ_b under the exact sideband
//!   route and the closed-form plane-wave / TM-mode / radiation-mode variants.
//! * [`pattern`]: the first-order electron probability density behind the film.
//!
//! Internal units are eV for energies and Å for lengths; angles are radians.
//! Beat wavelengths are reported in centimetres.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod beating;
pub mod constants;
mod error;
pub mod kinematics;
pub mod pattern;
pub mod waveguide;

pub use beating::{BeatPrediction, InputsEcho, RadiationAngles, Variant};
pub use error::{Error, Result};
pub use kinematics::{ElectronBeam, LaserField, Sideband, SidebandSet};
pub use pattern::{PatternParams, PatternSample, PhaseConvention};
pub use waveguide::{ModeSolution, Slab};
