//! Per-check verification records: measured values, residuals, and the
//! tolerance each check was judged against.

use crate::euclid::Point;

/// A point a record wants to show on a figure or in a report, under the name
/// the construction knows it by.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedPoint {
    pub name: String,
    pub point: Point,
}

/// Outcome of one numerical identity check.
///
/// Invariant: `pass` holds exactly when `residual <= tolerance_used`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationRecord {
    pub property_name: String,
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance_used: f64,
    pub witness_points: Vec<NamedPoint>,
}

impl VerificationRecord {
    /// Record comparing two measured values; the residual is their absolute
    /// difference.
    pub fn compare(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let residual = (lhs - rhs).abs();
        Self {
            property_name: name.into(),
            pass: residual <= tolerance,
            lhs,
            rhs,
            residual,
            tolerance_used: tolerance,
            witness_points: Vec::new(),
        }
    }

    /// Record for a residual that should vanish.
    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self::compare(name, residual, 0.0, tolerance)
    }

    pub fn with_witness(mut self, name: impl Into<String>, point: Point) -> Self {
        self.witness_points.push(NamedPoint {
            name: name.into(),
            point,
        });
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.property_name = name.into();
        self
    }
}
