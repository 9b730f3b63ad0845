//! Downward-opening parabolas with vertical axes, built from their latus
//! rectum endpoints.
//!
//! Only this orientation is modeled. The focus, vertex, and directrix are
//! derived from the latus rectum, not stored inputs.

use thiserror::Error;

use crate::euclid::{self, Line, Point};
use crate::numeric::ToleranceContext;
use crate::report::VerificationRecord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParabolaError {
    #[error("non-finite coordinate")]
    NonFiniteCoordinate,
    #[error("latus rectum not horizontal")]
    LatusRectumNotHorizontal,
    #[error("coincident endpoints")]
    CoincidentEndpoints,
    #[error("invalid interval")]
    InvalidInterval,
    #[error("line not tangent")]
    LineNotTangent,
    #[error("parallel tangent lines")]
    ParallelTangentLines,
    #[error(transparent)]
    Euclid(#[from] euclid::EuclidError),
}

/// Ratio of any latus rectum arc length to the semi-latus rectum. Computed
/// from the closed form `sqrt(2) + ln(1 + sqrt(2))` and certified against the
/// quadrature oracle in the test suites.
pub fn universal_parabolic_constant() -> f64 {
    2.0f64.sqrt() + (1.0 + 2.0f64.sqrt()).ln()
}

/// Downward-opening parabola with vertical axis.
///
/// With focus `(f_x, f_y)` and focal length `a` (focus-to-vertex distance),
/// the curve is `y = f_y + a - (x - f_x)^2 / (4a)`. The latus rectum is the
/// horizontal focal chord of width `4a`; the directrix is the horizontal
/// line at `f_y + 2a`, above the vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerticalParabola {
    focus: Point,
    focal_length: f64,
}

/// The arc of a parabola whose endpoints are its latus rectum endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatusArc {
    parabola: VerticalParabola,
}

impl LatusArc {
    pub fn of(parabola: VerticalParabola) -> Self {
        Self { parabola }
    }

    pub fn parabola(&self) -> &VerticalParabola {
        &self.parabola
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.parabola.latus_left(), self.parabola.latus_right())
    }

    pub fn length(&self) -> f64 {
        self.parabola.latus_arc_length()
    }
}

impl VerticalParabola {
    /// The unique downward-opening parabola with the given latus rectum
    /// endpoints. Endpoint order does not matter; their heights must agree
    /// within tolerance.
    pub fn from_latus_rectum(
        e1: Point,
        e2: Point,
        ctx: &ToleranceContext,
    ) -> Result<Self, ParabolaError> {
        if !(e1.is_finite() && e2.is_finite()) {
            return Err(ParabolaError::NonFiniteCoordinate);
        }
        let width = (e2.x - e1.x).abs();
        if width <= ctx.abs_floor {
            return Err(ParabolaError::CoincidentEndpoints);
        }
        if (e1.y - e2.y).abs() > ctx.tol_at(width.max(e1.y.abs()).max(e2.y.abs())) {
            return Err(ParabolaError::LatusRectumNotHorizontal);
        }
        Ok(Self {
            focus: e1.midpoint(e2),
            focal_length: width / 4.0,
        })
    }

    /// Focus-to-vertex distance (a quarter of the latus rectum width).
    pub fn focal_length(&self) -> f64 {
        self.focal_length
    }

    /// Focal parameter: focus-to-directrix distance, equal to the semi-latus
    /// rectum.
    pub fn focal_parameter(&self) -> f64 {
        2.0 * self.focal_length
    }

    pub fn focus(&self) -> Point {
        self.focus
    }

    pub fn vertex(&self) -> Point {
        Point::new(self.focus.x, self.focus.y + self.focal_length)
    }

    /// Height of the directrix, which lies above the vertex for this
    /// orientation.
    pub fn directrix_y(&self) -> f64 {
        self.focus.y + 2.0 * self.focal_length
    }

    pub fn latus_left(&self) -> Point {
        Point::new(self.focus.x - 2.0 * self.focal_length, self.focus.y)
    }

    pub fn latus_right(&self) -> Point {
        Point::new(self.focus.x + 2.0 * self.focal_length, self.focus.y)
    }

    pub fn latus_width(&self) -> f64 {
        4.0 * self.focal_length
    }

    /// Height of the curve at abscissa `x`.
    pub fn eval(&self, x: f64) -> f64 {
        let dx = x - self.focus.x;
        self.focus.y + self.focal_length - dx * dx / (4.0 * self.focal_length)
    }

    /// Curve slope at abscissa `x`.
    pub fn slope_at(&self, x: f64) -> f64 {
        -(x - self.focus.x) / (2.0 * self.focal_length)
    }

    /// Tangent line at the curve point over `x`.
    pub fn tangent_at(&self, x: f64) -> Line {
        Line::through(Point::new(x, self.eval(x)), self.slope_at(x))
    }

    /// Abscissa of the unique point where the tangent has slope `m`.
    pub fn touch_x_for_slope(&self, m: f64) -> f64 {
        self.focus.x - 2.0 * self.focal_length * m
    }

    /// The unique tangent line of slope `m`.
    pub fn tangent_with_slope(&self, m: f64) -> Line {
        let x = self.touch_x_for_slope(m);
        Line::through(Point::new(x, self.eval(x)), m)
    }

    /// Discriminant of the monic quadratic whose roots are the abscissae
    /// where `line` meets the curve. Zero means double contact (tangency);
    /// `None` for vertical lines, which always cross exactly once.
    pub fn intersection_discriminant(&self, line: &Line) -> Option<f64> {
        match *line {
            Line::SlopeIntercept { slope, intercept } => {
                let a = self.focal_length;
                let u = self.focus.x;
                let k = intercept - self.focus.y;
                let c1 = 4.0 * a * slope - 2.0 * u;
                let c0 = u * u - 4.0 * a * a + 4.0 * a * k;
                Some(c1 * c1 - 4.0 * c0)
            }
            Line::Vertical { .. } => None,
        }
    }

    /// Length of the full latus rectum arc: `p * (sqrt(2) + ln(1 + sqrt(2)))`.
    pub fn latus_arc_length(&self) -> f64 {
        self.focal_parameter() * universal_parabolic_constant()
    }

    /// Arc length between two abscissae by the antiderivative
    /// `a * (u * sqrt(1 + u^2) + asinh(u))` with `u = (x - f_x) / (2a)`.
    pub fn arc_length_between(&self, x0: f64, x1: f64) -> Result<f64, ParabolaError> {
        if !(x0.is_finite() && x1.is_finite()) {
            return Err(ParabolaError::NonFiniteCoordinate);
        }
        if x0 >= x1 {
            return Err(ParabolaError::InvalidInterval);
        }
        Ok(self.arc_antiderivative(x1) - self.arc_antiderivative(x0))
    }

    fn arc_antiderivative(&self, x: f64) -> f64 {
        let u = (x - self.focus.x) / (2.0 * self.focal_length);
        self.focal_length * (u * (1.0 + u * u).sqrt() + u.asinh())
    }

    /// Area between the chord over `[x0, x1]` and the arc: `(x1-x0)^3 / (24a)`.
    ///
    /// Equals 4/3 of the inscribed triangle whose apex is where the tangent
    /// runs parallel to the chord (the midpoint abscissa).
    pub fn segment_area(&self, x0: f64, x1: f64) -> Result<f64, ParabolaError> {
        if !(x0.is_finite() && x1.is_finite()) {
            return Err(ParabolaError::NonFiniteCoordinate);
        }
        if x0 >= x1 {
            return Err(ParabolaError::InvalidInterval);
        }
        let w = x1 - x0;
        Ok(w * w * w / (24.0 * self.focal_length))
    }

    /// Area of the triangle inscribed in the segment over `[x0, x1]`, with
    /// apex at the midpoint abscissa (where the tangent is chord-parallel).
    pub fn inscribed_triangle_area(&self, x0: f64, x1: f64) -> Result<f64, ParabolaError> {
        if !(x0.is_finite() && x1.is_finite()) {
            return Err(ParabolaError::NonFiniteCoordinate);
        }
        if x0 >= x1 {
            return Err(ParabolaError::InvalidInterval);
        }
        let xm = 0.5 * (x0 + x1);
        let p0 = Point::new(x0, self.eval(x0));
        let pm = Point::new(xm, self.eval(xm));
        let p1 = Point::new(x1, self.eval(x1));
        Ok(0.5 * (pm - p0).cross(p1 - p0).abs())
    }

    /// Checks that the circumcircle of the triangle bounded by three tangent
    /// lines passes through the focus.
    ///
    /// Each line must actually be tangent (verified by the slope round trip
    /// through [`Self::tangent_with_slope`]) and the lines pairwise
    /// non-parallel; a chord such as the latus rectum line is rejected.
    pub fn lambert_check(
        &self,
        l1: &Line,
        l2: &Line,
        l3: &Line,
        ctx: &ToleranceContext,
    ) -> Result<VerificationRecord, ParabolaError> {
        let lines = [l1, l2, l3];
        let mut touches = [(0.0, 0.0); 3];
        for (i, line) in lines.iter().enumerate() {
            let (slope, intercept) = match **line {
                Line::SlopeIntercept { slope, intercept } => (slope, intercept),
                // A vertical line meets a vertical-axis parabola once; it is
                // a secant direction, never a tangent.
                Line::Vertical { .. } => return Err(ParabolaError::LineNotTangent),
            };
            let expected = self.tangent_with_slope(slope);
            let expected_intercept = match expected {
                Line::SlopeIntercept { intercept, .. } => intercept,
                Line::Vertical { .. } => unreachable!("slope tangents are never vertical"),
            };
            if (intercept - expected_intercept).abs() > ctx.tol_at(expected_intercept) {
                return Err(ParabolaError::LineNotTangent);
            }
            touches[i] = (self.touch_x_for_slope(slope), slope);
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                if (touches[i].1 - touches[j].1).abs()
                    <= ctx
                        .abs_floor
                        .max(ctx.rel_tol * touches[i].1.abs().max(touches[j].1.abs()).max(1.0))
                {
                    return Err(ParabolaError::ParallelTangentLines);
                }
            }
        }
        // Two tangents of a vertical-axis parabola meet over the midpoint of
        // their touch abscissae. Anchoring each tangent at its touch point
        // keeps the vertices stable however far the figure sits from the
        // origin, where raw intercepts lose precision.
        let vertex = |i: usize, j: usize| {
            let (xi, mi) = touches[i];
            let (xj, mj) = touches[j];
            let x = 0.5 * (xi + xj);
            let yi = self.eval(xi) + mi * (x - xi);
            let yj = self.eval(xj) + mj * (x - xj);
            Point::new(x, 0.5 * (yi + yj))
        };
        let v12 = vertex(0, 1);
        let v23 = vertex(1, 2);
        let v31 = vertex(2, 0);
        let circle = euclid::circumcircle(v12, v23, v31, ctx)?;
        let dist = euclid::distance(circle.center, self.focus);
        let record = VerificationRecord::compare(
            "lambert_focus_on_circumcircle",
            dist,
            circle.radius,
            ctx.tol_at(circle.radius),
        )
        .with_witness("focus", self.focus)
        .with_witness("circumcenter", circle.center)
        .with_witness("vertex12", v12)
        .with_witness("vertex23", v23)
        .with_witness("vertex31", v31);
        Ok(record)
    }
}
