//! Command-line definitions.

use crate::commands::pattern::GridAxis;
use crate::commands::scan::ScanAxis;
use crate::output::{Format, Precision};
use beatwave_core::PhaseConvention;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "beatwave",
    version,
    about = "Long beating wavelength of laser-modulated electron beams"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand. Flags override the config file, which
/// overrides built-in defaults.
#[derive(Debug, Args, Default)]
pub struct Common {
    /// TOML config file.
    #[arg(long, global = true, env = "BEATWAVE_CONFIG")]
    pub config: Option<PathBuf>,
    /// Film material label from the material table.
    #[arg(long, global = true)]
    pub material: Option<String>,
    /// Refractive index; overrides the material's tabulated value.
    #[arg(long = "n", global = true)]
    pub n: Option<f64>,
    /// Electron kinetic energy (keV).
    #[arg(long, global = true)]
    pub kinetic_energy_kev: Option<f64>,
    /// Laser vacuum wavelength (Å).
    #[arg(long, global = true)]
    pub wavelength_angstrom: Option<f64>,
    /// Film thickness (Å).
    #[arg(long, global = true)]
    pub thickness_angstrom: Option<f64>,
    /// Model: base, planewave, exact, tmM (e.g. tm0) or radiation.
    #[arg(long, global = true)]
    pub variant: Option<String>,
    /// Initial phase of the stationary density modulation.
    #[arg(long, global = true, value_enum)]
    pub phase_convention: Option<PhaseArg>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// `full` for round-trip precision, or a number of significant digits.
    #[arg(long, global = true)]
    pub precision: Option<Precision>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhaseArg {
    SineTheory,
    CosineExperiment,
}

impl From<PhaseArg> for PhaseConvention {
    fn from(p: PhaseArg) -> Self {
        match p {
            PhaseArg::SineTheory => PhaseConvention::SineTheory,
            PhaseArg::CosineExperiment => PhaseConvention::CosineExperiment,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predict λ_b for one material and model, e.g. `predict SiO2 tm0`.
    Predict {
        /// Up to two of: a material label, a model variant.
        selectors: Vec<String>,
        /// Target λ_b (cm) for the radiation model.
        #[arg(long)]
        target_cm: Option<f64>,
    },
    /// Sweep one parameter and tabulate λ_b.
    Scan {
        #[arg(long, value_enum)]
        axis: ScanAxis,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 11)]
        steps: usize,
        /// Target λ_b (cm) for the radiation model.
        #[arg(long)]
        target_cm: Option<f64>,
    },
    /// Compare measured λ_b with every material and model.
    Report {
        /// Observed λ_b (cm); replaces the configured experiments.
        #[arg(long = "observed-cm")]
        observed_cm: Vec<f64>,
    },
    /// Tabulate the electron density ρ/ρ0 on an x, z, t grid.
    Pattern {
        /// x grid in Å, from:to:steps.
        #[arg(long, default_value = "0:0:1")]
        x: GridAxis,
        /// z grid in cm, from:to:steps.
        #[arg(long, default_value = "0:3:1001")]
        z: GridAxis,
        /// t grid in s, from:to:steps.
        #[arg(long, default_value = "0:0:1")]
        t: GridAxis,
        /// Modulation depth β.
        #[arg(long)]
        beta: Option<f64>,
        /// Optimum thickness d0 (Å).
        #[arg(long)]
        d0_angstrom: Option<f64>,
        /// Emit the envelope maxima over [0, z_to] instead of the grid.
        #[arg(long)]
        extrema: bool,
    },
    /// List the guided TM modes of the film.
    Modes,
    /// Dump the physical constant table as JSON.
    Constants,
}
