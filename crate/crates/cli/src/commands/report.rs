//! Theory-versus-experiment discrepancy report.
//!
//! The measurements do not say which film material they were taken with, so
//! every experiment is compared against every material and model, and
//! against the material-independent upper limit λ_b0.

use crate::config::{ExperimentRecord, MaterialTable};
use crate::error::Result;
use crate::model::{evaluate, ModelVariant, Setup};
use crate::output::{self, number, optional, Format, Precision, Table};
use beatwave_core::beating::{beat_base, invert_radiation_angle};
use beatwave_core::constants::rad_to_deg;
use serde::Serialize;

/// Relative gap above which a prediction is flagged.
pub const GAP_THRESHOLD: f64 = 0.10;

const MODELS: [ModelVariant; 2] = [ModelVariant::Planewave, ModelVariant::Tm(0)];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub source: String,
    pub observed_cm: f64,
    pub uncertainty_cm: Option<f64>,
    pub material: String,
    pub refractive_index: Option<f64>,
    pub model: ModelVariant,
    pub predicted_cm: Option<f64>,
    /// observed / predicted − 1.
    pub gap: Option<f64>,
    pub flagged: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub source: String,
    pub observed_cm: f64,
    pub gap_to_upper_limit: f64,
    /// Smallest |gap| over all material predictions, with its row label.
    pub best_material: Option<String>,
    pub best_model: Option<ModelVariant>,
    pub best_gap: Option<f64>,
    /// External incidence angle a radiation mode would need (deg).
    pub radiation_theta_deg: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub upper_limit_cm: f64,
    pub min_gap_to_upper_limit: f64,
    pub threshold: f64,
    pub exceeds_threshold: bool,
    pub experiments: Vec<ExperimentSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyReport {
    pub generator: String,
    pub kinetic_energy_ev: f64,
    pub wavelength_angstrom: f64,
    pub thickness_angstrom: f64,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

fn gap(observed: f64, predicted: f64) -> f64 {
    observed / predicted - 1.0
}

/// Builds the report. `setup` supplies beam, laser and slab thickness; its
/// material is ignored in favour of the whole table.
pub fn build_report(
    experiments: &[ExperimentRecord],
    materials: &MaterialTable,
    setup: &Setup,
) -> Result<DiscrepancyReport> {
    let upper_limit = beat_base(&setup.beam, &setup.laser).lambda_b;
    let mut rows = Vec::new();
    let mut summaries = Vec::new();

    for exp in experiments {
        let observed = exp.lambda_b_cm;
        let row = |material: &str, n, model, predicted: Option<f64>, note: &str| {
            let g = predicted.map(|p| gap(observed, p));
            ReportRow {
                source: exp.source.clone(),
                observed_cm: observed,
                uncertainty_cm: exp.uncertainty_cm,
                material: material.to_string(),
                refractive_index: n,
                model,
                predicted_cm: predicted,
                gap: g,
                flagged: g.is_some_and(|g| g.abs() > GAP_THRESHOLD),
                note: note.to_string(),
            }
        };

        rows.push(row(
            "any",
            None,
            ModelVariant::Base,
            Some(upper_limit),
            "upper limit",
        ));
        let mut best: Option<&ReportRow> = None;
        let first_material_row = rows.len();
        for (material, n) in materials.iter() {
            for model in MODELS {
                match n {
                    Some(n) => {
                        let s = Setup {
                            material: material.to_string(),
                            refractive_index: Some(n),
                            ..setup.clone()
                        };
                        let eval = evaluate(&s, model, None)?;
                        rows.push(row(
                            material,
                            Some(n),
                            model,
                            Some(eval.prediction.lambda_b),
                            "",
                        ));
                    }
                    None => rows.push(row(material, None, model, None, "n unavailable")),
                }
            }
        }
        for r in &rows[first_material_row..] {
            if let Some(g) = r.gap {
                if best.is_none_or(|b| g.abs() < b.gap.unwrap().abs()) {
                    best = Some(r);
                }
            }
        }
        // θ does not depend on n; any guiding index gives the same angle
        let theta = invert_radiation_angle(&setup.beam, &setup.laser, 1.5, observed)
            .ok()
            .map(|a| rad_to_deg(a.theta_external));
        summaries.push(ExperimentSummary {
            source: exp.source.clone(),
            observed_cm: observed,
            gap_to_upper_limit: gap(observed, upper_limit),
            best_material: best.map(|b| b.material.clone()),
            best_model: best.map(|b| b.model),
            best_gap: best.and_then(|b| b.gap),
            radiation_theta_deg: theta,
        });
    }

    let min_gap = summaries
        .iter()
        .map(|s| s.gap_to_upper_limit)
        .fold(f64::INFINITY, f64::min);
    Ok(DiscrepancyReport {
        generator: output::provenance(),
        kinetic_energy_ev: setup.beam.kinetic_energy(),
        wavelength_angstrom: setup.laser.vacuum_wavelength(),
        thickness_angstrom: setup.thickness_angstrom,
        rows,
        summary: Summary {
            upper_limit_cm: upper_limit,
            min_gap_to_upper_limit: min_gap,
            threshold: GAP_THRESHOLD,
            exceeds_threshold: min_gap > GAP_THRESHOLD,
            experiments: summaries,
        },
    })
}

fn table(report: &DiscrepancyReport, precision: Precision) -> Table {
    let mut t = Table::new([
        "source",
        "observed_cm",
        "uncertainty_cm",
        "material",
        "n",
        "model",
        "predicted_cm",
        "gap",
        "flagged",
        "note",
    ]);
    for r in &report.rows {
        t.push(vec![
            r.source.clone(),
            number(r.observed_cm, precision),
            optional(r.uncertainty_cm, precision),
            r.material.clone(),
            optional(r.refractive_index, precision),
            r.model.to_string(),
            optional(r.predicted_cm, precision),
            optional(r.gap, precision),
            r.flagged.to_string(),
            r.note.clone(),
        ]);
    }
    t
}

fn percent(g: f64) -> String {
    format!("{:+.1}%", 100.0 * g)
}

pub fn render(report: &DiscrepancyReport, format: Format, precision: Precision) -> Result<String> {
    match format {
        Format::Json => output::json(report),
        Format::Csv => table(report, precision).to_csv(),
        Format::Text => {
            let s = &report.summary;
            let mut rows = Table::new([
                "source",
                "observed",
                "material",
                "model",
                "predicted",
                "gap",
                "",
            ]);
            for r in &report.rows {
                rows.push(vec![
                    r.source.clone(),
                    format!("{:.2} cm", r.observed_cm),
                    r.material.clone(),
                    r.model.to_string(),
                    r.predicted_cm
                        .map(|p| format!("{p:.4} cm"))
                        .unwrap_or_else(|| "-".into()),
                    r.gap.map(percent).unwrap_or_else(|| "-".into()),
                    if r.flagged {
                        "> 10%".into()
                    } else {
                        r.note.clone()
                    },
                ]);
            }
            let mut out = rows.to_text();
            out.push_str(&format!(
                "\nupper limit for guided modes: {:.4} cm\n",
                s.upper_limit_cm
            ));
            out.push_str(&format!(
                "smallest gap to the upper limit: {} ({})\n",
                percent(s.min_gap_to_upper_limit),
                if s.exceeds_threshold {
                    "exceeds 10%"
                } else {
                    "within 10%"
                }
            ));
            for e in &s.experiments {
                if let Some(theta) = e.radiation_theta_deg {
                    out.push_str(&format!(
                        "{}: a radiation mode needs light incident at {theta:.1} deg to the film surface (independent of n)\n",
                        e.source
                    ));
                }
            }
            Ok(out)
        }
    }
}
