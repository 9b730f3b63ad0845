//! JSON report document: stable field order and fixed 15-significant-digit
//! formatting for every real, so reports diff cleanly across runs and
//! machines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use parbelos::verify::SuiteReport;

/// An `f64` that serializes as a JSON number with exactly 15 significant
/// digits (scientific notation). Parsing back and re-serializing reproduces
/// the same bytes.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(transparent)]
pub struct Real(pub f64);

pub fn format_real(v: f64) -> String {
    // Normalize -0 so reports never differ on the sign of zero.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.14e}")
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format_real(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub name: String,
    pub x: Real,
    pub y: Real,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecordJson {
    pub property_name: String,
    pub pass: bool,
    pub lhs: Real,
    pub rhs: Real,
    pub residual: Real,
    pub tolerance_used: Real,
    pub witness_points: Vec<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub cusps: [Real; 3],
    pub records: Vec<RecordJson>,
    pub summary: Summary,
    pub derived_quantities: BTreeMap<String, Real>,
}

impl ReportDocument {
    pub fn from_suite(report: &SuiteReport) -> Self {
        let records: Vec<RecordJson> = report
            .records
            .iter()
            .map(|r| RecordJson {
                property_name: r.property_name.clone(),
                pass: r.pass,
                lhs: Real(r.lhs),
                rhs: Real(r.rhs),
                residual: Real(r.residual),
                tolerance_used: Real(r.tolerance_used),
                witness_points: r
                    .witness_points
                    .iter()
                    .map(|w| WitnessJson {
                        name: w.name.clone(),
                        x: Real(w.point.x),
                        y: Real(w.point.y),
                    })
                    .collect(),
            })
            .collect();
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            cusps: report.cusps.map(Real),
            summary: Summary {
                pass: report.pass_count(),
                fail: report.fail_count(),
            },
            records,
            derived_quantities: report
                .derived
                .iter()
                .map(|(k, v)| (k.clone(), Real(*v)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization is total");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting_has_15_significant_digits() {
        assert_eq!(format_real(1.0), "1.00000000000000e0");
        assert_eq!(format_real(0.0), "0.00000000000000e0");
        assert_eq!(format_real(-0.0), "0.00000000000000e0");
        assert_eq!(format_real(2.295587149392638), "2.29558714939264e0");
        assert_eq!(format_real(-0.125), "-1.25000000000000e-1");
    }

    #[test]
    fn real_round_trips_byte_identically() {
        for v in [
            0.0,
            1.0,
            -1.0 / 3.0,
            2.295587149392638,
            1.25e-13,
            -9.87654321e12,
            std::f64::consts::PI,
        ] {
            let s = format_real(v);
            let parsed: f64 = s.parse().unwrap();
            assert_eq!(format_real(parsed), s, "value {v}");
        }
    }

    #[test]
    fn document_round_trips_byte_identically() {
        let suite = parbelos::verify::run_suite(
            [0.0, 1.0, 4.0],
            &parbelos::verify::Selection::All,
            &parbelos::verify::SuiteOptions::default(),
        )
        .unwrap();
        let doc = ReportDocument::from_suite(&suite);
        let json = doc.to_json();
        let reparsed: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed.to_json(), json);
    }
}
