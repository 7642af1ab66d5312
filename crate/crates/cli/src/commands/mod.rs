pub mod pattern;
pub mod report;
pub mod scan;

use crate::cli::{Cli, Command, Common};
use crate::config::{load_config, Config, ExperimentRecord};
use crate::error::{CliError, Result};
use crate::model::{evaluate, Evaluation, ModelVariant, Setup};
use crate::output::{self, number, Format, Precision, Table};
use beatwave_core::constants::{rad_to_deg, TABLE};
use beatwave_core::pattern::PatternParams;
use beatwave_core::waveguide::{solve_tm_mode, tm_cutoff_thickness, tm_mode_count};
use beatwave_core::BeatPrediction;
use serde::Serialize;

/// Runs a parsed command line and returns the document to emit.
pub fn run(cli: &Cli) -> Result<String> {
    let config = match &cli.common.config {
        Some(path) => load_config(path)?,
        None => Config::default(),
    };
    let common = &cli.common;
    let precision = common.precision.unwrap_or_default();
    match &cli.command {
        Command::Predict {
            selectors,
            target_cm,
        } => {
            let (material, variant) = split_selectors(selectors, common)?;
            let setup = resolve(&config, common, material.as_deref())?;
            let variant = variant.unwrap_or(ModelVariant::Tm(0));
            let eval = evaluate(&setup, variant, *target_cm)?;
            render_prediction(
                &setup,
                &eval,
                common.format.unwrap_or(Format::Text),
                precision,
            )
        }
        Command::Scan {
            axis,
            from,
            to,
            steps,
            target_cm,
        } => {
            let setup = resolve(&config, common, None)?;
            let variant = variant_flag(common)?.unwrap_or(ModelVariant::Planewave);
            let points = scan::scan(&setup, *axis, *from, *to, *steps, variant, *target_cm)?;
            emit_table(
                scan::table(*axis, &points, precision),
                common.format.unwrap_or(Format::Csv),
            )
        }
        Command::Report { observed_cm } => {
            let setup = resolve(&config, common, None)?;
            let experiments = if observed_cm.is_empty() {
                config.experiments.clone()
            } else {
                observed_cm
                    .iter()
                    .enumerate()
                    .map(|(i, &lambda_b_cm)| {
                        if lambda_b_cm > 0.0 && lambda_b_cm.is_finite() {
                            Ok(ExperimentRecord {
                                lambda_b_cm,
                                uncertainty_cm: None,
                                source: format!("cli{}", i + 1),
                            })
                        } else {
                            Err(CliError::Validation(format!(
                                "observed λ_b = {lambda_b_cm} must be > 0"
                            )))
                        }
                    })
                    .collect::<Result<_>>()?
            };
            let mut materials = config.materials.clone();
            if let (Some(n), Some(label)) = (common.n, common.material.as_deref()) {
                materials.insert(label, Some(n))?;
            }
            let report = report::build_report(&experiments, &materials, &setup)?;
            report::render(&report, common.format.unwrap_or(Format::Text), precision)
        }
        Command::Pattern {
            x,
            z,
            t,
            beta,
            d0_angstrom,
            extrema,
        } => {
            let setup = resolve(&config, common, None)?;
            let variant = variant_flag(common)?.unwrap_or(ModelVariant::Tm(0));
            let eval = evaluate(&setup, variant, None)?;
            let params = PatternParams::new(
                beta.unwrap_or(config.defaults.beta),
                setup.thickness_angstrom,
                d0_angstrom.unwrap_or(config.defaults.d0_angstrom),
                setup.beam,
                setup.laser,
                eval.x_wavenumber,
                common
                    .phase_convention
                    .map(Into::into)
                    .unwrap_or(config.defaults.phase_convention),
            )?;
            let format = common.format.unwrap_or(Format::Csv);
            if *extrema {
                emit_table(pattern::extrema_table(&params, z.to, precision)?, format)
            } else {
                let samples = pattern::grid(&params, *x, *z, *t)?;
                match format {
                    Format::Json => output::json(&samples),
                    other => emit_table(pattern::samples_table(&samples, precision), other),
                }
            }
        }
        Command::Modes => {
            let setup = resolve(&config, common, None)?;
            emit_table(
                modes_table(&setup, precision)?,
                common.format.unwrap_or(Format::Csv),
            )
        }
        Command::Constants => constants_json(),
    }
}

fn emit_table(table: Table, format: Format) -> Result<String> {
    match format {
        Format::Csv => table.to_csv(),
        Format::Text => Ok(table.to_text()),
        Format::Json => {
            let records: Vec<serde_json::Map<String, serde_json::Value>> = table
                .rows
                .iter()
                .map(|row| {
                    table
                        .header
                        .iter()
                        .zip(row)
                        .map(|(h, cell)| (h.clone(), json_cell(cell)))
                        .collect()
                })
                .collect();
            output::json(&records)
        }
    }
}

fn json_cell(cell: &str) -> serde_json::Value {
    if cell.is_empty() {
        return serde_json::Value::Null;
    }
    match cell.parse::<f64>() {
        Ok(v) => serde_json::Number::from_f64(v)
            .map(serde_json::Value::Number)
            .unwrap_or_else(|| serde_json::Value::String(cell.to_string())),
        Err(_) => serde_json::Value::String(cell.to_string()),
    }
}

fn variant_flag(common: &Common) -> Result<Option<ModelVariant>> {
    common.variant.as_deref().map(str::parse).transpose()
}

/// Positional `predict` selectors: each is a model variant if it parses as
/// one, otherwise a material label.
fn split_selectors(
    selectors: &[String],
    common: &Common,
) -> Result<(Option<String>, Option<ModelVariant>)> {
    if selectors.len() > 2 {
        return Err(CliError::Usage(format!(
            "expected at most a material and a variant, got {selectors:?}"
        )));
    }
    let mut material = common.material.clone();
    let mut variant = variant_flag(common)?;
    let mut seen_material = false;
    let mut seen_variant = false;
    for s in selectors {
        match s.parse::<ModelVariant>() {
            Ok(v) if !seen_variant => {
                variant = Some(v);
                seen_variant = true;
            }
            _ if !seen_material => {
                material = Some(s.clone());
                seen_material = true;
            }
            _ => return Err(CliError::Usage(format!("unexpected selector {s:?}"))),
        }
    }
    Ok((material, variant))
}

/// Merges flags, config and built-in defaults into concrete inputs.
pub fn resolve(config: &Config, common: &Common, material: Option<&str>) -> Result<Setup> {
    let d = &config.defaults;
    let material = material.or(common.material.as_deref());
    let (label, n) = match (material, common.n) {
        (_, Some(n)) => (material.unwrap_or("custom").to_string(), Some(n)),
        (Some(m), None) => {
            let (label, n) = config.materials.lookup(m)?;
            (label.to_string(), n)
        }
        (None, None) => {
            let (label, n) = config.materials.lookup(&d.material)?;
            (label.to_string(), n)
        }
    };
    Setup::new(
        label,
        n,
        common.kinetic_energy_kev.unwrap_or(d.kinetic_energy_kev),
        common.wavelength_angstrom.unwrap_or(d.wavelength_angstrom),
        common.thickness_angstrom.unwrap_or(d.thickness_angstrom),
    )
}

#[derive(Debug, Serialize)]
struct PredictionDoc<'a> {
    generator: String,
    material: &'a str,
    model: ModelVariant,
    #[serde(flatten)]
    prediction: &'a BeatPrediction,
    #[serde(skip_serializing_if = "Option::is_none")]
    thickness_angstrom: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_deg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    effective_index: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta_external_deg: Option<f64>,
}

fn render_prediction(
    setup: &Setup,
    eval: &Evaluation,
    format: Format,
    precision: Precision,
) -> Result<String> {
    let alpha = eval
        .mode
        .map(|m| m.alpha)
        .or(eval.radiation.map(|r| r.alpha_internal));
    let doc = PredictionDoc {
        generator: output::provenance(),
        material: &setup.material,
        model: eval.variant,
        prediction: &eval.prediction,
        thickness_angstrom: eval.mode.map(|_| setup.thickness_angstrom),
        alpha_deg: alpha.map(rad_to_deg),
        effective_index: eval.mode.map(|m| m.effective_index),
        theta_external_deg: eval.radiation.map(|r| rad_to_deg(r.theta_external)),
    };
    let inputs = &eval.prediction.inputs;
    let mut table = Table::new([
        "material",
        "model",
        "lambda_b_cm",
        "kinetic_energy_kev",
        "wavelength_angstrom",
        "n",
        "thickness_angstrom",
        "alpha_deg",
        "theta_external_deg",
    ]);
    table.push(vec![
        setup.material.clone(),
        eval.variant.to_string(),
        number(eval.prediction.lambda_b, precision),
        number(inputs.kinetic_energy_ev / 1e3, precision),
        number(inputs.vacuum_wavelength_angstrom, precision),
        output::optional(inputs.refractive_index, precision),
        output::optional(doc.thickness_angstrom, precision),
        output::optional(doc.alpha_deg, precision),
        output::optional(doc.theta_external_deg, precision),
    ]);
    match format {
        Format::Json => output::json(&doc),
        Format::Csv => table.to_csv(),
        Format::Text => {
            let mut out = format!(
                "lambda_b = {} cm  ({}, {})\n",
                number(eval.prediction.lambda_b, Precision::Significant(4)),
                setup.material,
                eval.variant
            );
            for (h, v) in table.header.iter().zip(&table.rows[0]).skip(3) {
                if !v.is_empty() {
                    out.push_str(&format!("  {h} = {v}\n"));
                }
            }
            Ok(out)
        }
    }
}

fn modes_table(setup: &Setup, precision: Precision) -> Result<Table> {
    let slab = setup.slab()?;
    let laser = &setup.laser;
    let mut t = Table::new([
        "mode",
        "cutoff_thickness_angstrom",
        "alpha_deg",
        "effective_index",
        "kappa_per_angstrom",
        "gamma_per_angstrom",
        "residual",
        "lambda_b_cm",
    ]);
    for m in 0..tm_mode_count(&slab, laser) {
        let mode = solve_tm_mode(&slab, laser, m)?;
        let lambda = evaluate(setup, ModelVariant::Tm(m), None)?
            .prediction
            .lambda_b;
        t.push(vec![
            format!("TM{m}"),
            number(
                tm_cutoff_thickness(laser, slab.refractive_index(), m)?,
                precision,
            ),
            number(rad_to_deg(mode.alpha), precision),
            number(mode.effective_index, precision),
            number(mode.kappa, precision),
            number(mode.gamma, precision),
            number(mode.residual, precision),
            number(lambda, precision),
        ]);
    }
    Ok(t)
}

fn constants_json() -> Result<String> {
    #[derive(Serialize)]
    struct Doc {
        generator: String,
        constants: &'static [beatwave_core::constants::Constant],
    }
    output::json(&Doc {
        generator: output::provenance(),
        constants: &TABLE,
    })
}
