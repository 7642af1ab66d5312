//! Number formatting and CSV/JSON emitters.

use crate::error::{CliError, Result};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Provenance line written at the top of every CSV file.
pub fn provenance() -> String {
    format!("beatwave {}", env!("CARGO_PKG_VERSION"))
}

/// Output document format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// How many digits numbers are printed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Shortest representation that parses back to the same `f64`.
    Full,
    /// Rounded to this many significant digits.
    Significant(usize),
}

impl Default for Precision {
    fn default() -> Self {
        Precision::Significant(6)
    }
}

impl FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("full") {
            return Ok(Precision::Full);
        }
        match s.parse::<usize>() {
            Ok(digits @ 1..=17) => Ok(Precision::Significant(digits)),
            _ => Err(format!(
                "precision must be `full` or 1..=17 digits, got {s:?}"
            )),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Full => f.write_str("full"),
            Precision::Significant(d) => write!(f, "{d}"),
        }
    }
}

/// Formats `value` at the given precision. Very large or small magnitudes
/// switch to exponent notation.
pub fn number(value: f64, precision: Precision) -> String {
    let value = match precision {
        Precision::Full => value,
        Precision::Significant(digits) if value.is_finite() => format!("{:.*e}", digits - 1, value)
            .parse()
            .unwrap_or(value),
        Precision::Significant(_) => value,
    };
    let magnitude = value.abs();
    if value != 0.0 && value.is_finite() && !(1e-4..1e15).contains(&magnitude) {
        format!("{value:e}")
    } else {
        format!("{value}")
    }
}

/// Formats an optional number; `None` becomes an empty field.
pub fn optional(value: Option<f64>, precision: Precision) -> String {
    value.map(|v| number(v, precision)).unwrap_or_default()
}

/// A header plus rows of already-formatted fields.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I, S>(header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// RFC 4180 CSV with LF line endings and a leading `#` provenance line.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!("# {}\n", provenance()).into_bytes();
        {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut out);
            writer.write_record(&self.header)?;
            for row in &self.rows {
                writer.write_record(row)?;
            }
            writer.flush()?;
        }
        String::from_utf8(out).map_err(|e| CliError::Output(e.to_string()))
    }

    /// Space-aligned columns for terminals.
    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.header[c].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.header);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}
