//! Materials, default parameters and bundled experimental values.
//!
//! The config file is TOML. Every section is optional; absent keys keep the
//! built-in defaults. Example:
//!
//! ```toml
//! [defaults]
//! kinetic_energy_kev = 50.0
//! wavelength_angstrom = 4880.0
//! thickness_angstrom = 1000.0
//! material = "SiO2"
//! beta = 0.35
//! d0_angstrom = 1007.0
//! phase_convention = "sine_theory"
//!
//! [materials.SiO2]
//! n = 1.559
//!
//! [materials.Al2O3]          # listed, index unknown
//!
//! [[experiments]]
//! lambda_b_cm = 1.73
//! uncertainty_cm = 0.01
//! source = "ref14"
//! ```

use crate::error::{CliError, Result};
use beatwave_core::PhaseConvention;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Refractive indices (at the laser line) by material label. A label may be
/// listed without an index.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct MaterialTable {
    entries: BTreeMap<String, Option<f64>>,
}

impl MaterialTable {
    /// Inserts or replaces an entry. Indices must exceed 1.
    pub fn insert(&mut self, label: &str, index: Option<f64>) -> Result<()> {
        if let Some(n) = index {
            if !(n > 1.0 && n.is_finite()) {
                return Err(CliError::Validation(format!(
                    "material {label}: refractive index {n} must be > 1"
                )));
            }
        }
        self.entries.insert(label.to_string(), index);
        Ok(())
    }

    /// Looks up a label case-insensitively. `Ok(None)` means the material is
    /// known but has no index.
    pub fn lookup(&self, label: &str) -> Result<(&str, Option<f64>)> {
        self.entries
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(label))
            .map(|(k, v)| (k.as_str(), *v))
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown material {label:?} (known: {})",
                    self.labels().collect::<Vec<_>>().join(", ")
                ))
            })
    }

    /// Refractive index of `label`, failing if it is unknown or unindexed.
    pub fn index(&self, label: &str) -> Result<f64> {
        match self.lookup(label)? {
            (_, Some(n)) => Ok(n),
            (name, None) => Err(CliError::Validation(format!(
                "refractive index of {name} is unavailable; pass --n"
            ))),
        }
    }

    /// Labels in sorted order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Entries in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Option<f64>)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

/// One published beat-wavelength measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentRecord {
    pub lambda_b_cm: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uncertainty_cm: Option<f64>,
    pub source: String,
}

/// Default physical parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Defaults {
    pub kinetic_energy_kev: f64,
    pub wavelength_angstrom: f64,
    pub thickness_angstrom: f64,
    pub material: String,
    pub beta: f64,
    pub d0_angstrom: f64,
    pub phase_convention: PhaseConvention,
}

/// Everything loaded from a config file (or built in).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub materials: MaterialTable,
    pub defaults: Defaults,
    pub experiments: Vec<ExperimentRecord>,
}

impl Default for Config {
    fn default() -> Self {
        let mut materials = MaterialTable::default();
        materials.insert("SrF2", Some(1.43)).unwrap();
        materials.insert("SiO2", Some(1.559)).unwrap();
        materials.insert("Al2O3", None).unwrap();
        let experiment = |lambda_b_cm, uncertainty_cm, source: &str| ExperimentRecord {
            lambda_b_cm,
            uncertainty_cm,
            source: source.to_string(),
        };
        Config {
            materials,
            defaults: Defaults {
                kinetic_energy_kev: 50.0,
                wavelength_angstrom: 4880.0,
                thickness_angstrom: 1000.0,
                material: "SiO2".to_string(),
                beta: 0.35,
                d0_angstrom: 1007.0,
                phase_convention: PhaseConvention::SineTheory,
            },
            experiments: vec![
                experiment(1.70, None, "ref2"),
                experiment(1.75, None, "ref13"),
                experiment(1.73, Some(0.01), "ref14"),
            ],
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    defaults: RawDefaults,
    #[serde(default)]
    materials: BTreeMap<String, RawMaterial>,
    experiments: Option<Vec<ExperimentRecord>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDefaults {
    kinetic_energy_kev: Option<f64>,
    wavelength_angstrom: Option<f64>,
    thickness_angstrom: Option<f64>,
    material: Option<String>,
    beta: Option<f64>,
    d0_angstrom: Option<f64>,
    phase_convention: Option<PhaseConvention>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMaterial {
    n: Option<f64>,
}

/// Parses a TOML config document on top of the built-in defaults.
pub fn parse_config(text: &str, origin: &str) -> Result<Config> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Config {
        path: origin.to_string(),
        message: e.to_string(),
    })?;
    let mut config = Config::default();
    let d = &mut config.defaults;
    let r = raw.defaults;
    d.kinetic_energy_kev = r.kinetic_energy_kev.unwrap_or(d.kinetic_energy_kev);
    d.wavelength_angstrom = r.wavelength_angstrom.unwrap_or(d.wavelength_angstrom);
    d.thickness_angstrom = r.thickness_angstrom.unwrap_or(d.thickness_angstrom);
    d.beta = r.beta.unwrap_or(d.beta);
    d.d0_angstrom = r.d0_angstrom.unwrap_or(d.d0_angstrom);
    d.phase_convention = r.phase_convention.unwrap_or(d.phase_convention);
    if let Some(material) = r.material {
        d.material = material;
    }
    for (label, material) in raw.materials {
        config.materials.insert(&label, material.n)?;
    }
    if let Some(experiments) = raw.experiments {
        config.experiments = experiments;
    }
    config.validate()?;
    Ok(config)
}

/// Reads and parses a config file.
pub fn load_config(path: &Path) -> Result<Config> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_config(&text, &path.display().to_string())
}

impl Config {
    fn validate(&self) -> Result<()> {
        let d = &self.defaults;
        let positive = [
            ("kinetic_energy_kev", d.kinetic_energy_kev),
            ("wavelength_angstrom", d.wavelength_angstrom),
            ("thickness_angstrom", d.thickness_angstrom),
            ("d0_angstrom", d.d0_angstrom),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(CliError::Validation(format!(
                    "{name} = {value} must be > 0"
                )));
            }
        }
        if !(0.0..=1.0).contains(&d.beta) {
            return Err(CliError::Validation(format!(
                "beta = {} must lie in [0, 1]",
                d.beta
            )));
        }
        for e in &self.experiments {
            if !(e.lambda_b_cm > 0.0 && e.lambda_b_cm.is_finite()) {
                return Err(CliError::Validation(format!(
                    "experiment {}: lambda_b_cm = {} must be > 0",
                    e.source, e.lambda_b_cm
                )));
            }
        }
        Ok(())
    }
}
