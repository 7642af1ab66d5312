use core::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Failures of the physical model or of its numerical evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain where the model is defined.
    Domain {
        /// Name of the offending quantity.
        quantity: &'static str,
        /// The rejected value.
        value: f64,
        /// Human-readable requirement, e.g. `"> 0"`.
        requirement: &'static str,
    },
    /// Sideband `order` would carry imaginary longitudinal momentum.
    EvanescentSideband {
        /// Photon-exchange order, one of -1, 0, +1.
        order: i8,
    },
    /// The requested TM mode is not guided by the slab.
    NoSuchMode {
        /// Requested mode index.
        mode_index: u32,
        /// Number of guided TM modes at this thickness.
        guided: u32,
    },
    /// A radiation-mode inversion was requested for a target that guided
    /// modes can already reach.
    NotRadiationMode {
        /// Requested beat wavelength (cm).
        target_cm: f64,
        /// Upper limit λ_b0 (cm).
        limit_cm: f64,
    },
    /// No real incidence angle reproduces the target beat wavelength.
    UnreachableTarget {
        /// Requested beat wavelength (cm).
        target_cm: f64,
    },
    /// A root finder failed to converge or bracket a root.
    Numerical(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain {
                quantity,
                value,
                requirement,
            } => write!(
                f,
                "{quantity} = {value} is out of domain (requires {requirement})"
            ),
            Error::EvanescentSideband { order } => {
                write!(f, "sideband n = {order} is evanescent (p_z² < 0)")
            }
            Error::NoSuchMode { mode_index, guided } => write!(
                f,
                "TM{mode_index} is not guided: the slab supports {guided} TM mode(s)"
            ),
            Error::NotRadiationMode {
                target_cm,
                limit_cm,
            } => write!(
                f,
                "target λ_b = {target_cm} cm does not exceed the guided-mode limit {limit_cm} cm"
            ),
            Error::UnreachableTarget { target_cm } => {
                write!(f, "no real incidence angle yields λ_b = {target_cm} cm")
            }
            Error::Numerical(msg) => write!(f, "numerical failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn require_positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            value,
            requirement: "finite and > 0",
        })
    }
}
