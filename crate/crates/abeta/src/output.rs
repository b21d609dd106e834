//! Number formatting and document writers.
//!
//! Floats are printed with 17 significant digits, enough for every `f64` to
//! parse back to itself.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::CliError;

/// `x` with 17 significant digits; `NaN`, `inf` and `-inf` otherwise.
pub fn fmt_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// A float serialized through [`fmt_num`]; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(fmt_num(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

pub fn nums(xs: &[f64]) -> Vec<Num> {
    xs.iter().copied().map(Num).collect()
}

pub fn json_document<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::new(None, e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn csv_document(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::new(None, e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::new(None, e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::new(None, e.to_string()))
}
