//! The parbelos: three cusps on a horizontal line and the latus rectum arcs
//! of the three downward-opening parabolas they span.
//!
//! The outer arc sits over the full span, the two inner arcs over the
//! sub-spans. The inner arcs are tangent to the outer one at the outer cusps
//! but meet each other at a right angle at the middle cusp.
//!
//! Formulas for the parallelogram, rectangle, diagonal, and circumcircle are
//! evaluated in normalized coordinates (first cusp at the origin, cusp line
//! as x-axis) and translated back out, so residuals stay at rounding level
//! wherever the figure sits.

use thiserror::Error;

use crate::euclid::{
    self, distance, Circle, EuclidError, Line, Point, Quadrilateral,
};
use crate::numeric::{solve_quadratic, NumericError, QuadraticRoots, ToleranceContext};
use crate::parabola::{ParabolaError, VerticalParabola};
use crate::report::VerificationRecord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParbelosError {
    #[error("cusps not strictly ordered")]
    CuspsNotStrictlyOrdered,
    #[error("non-finite cusp coordinate")]
    NonFiniteCusp,
    #[error("no admissible root for the common tangent")]
    NoAdmissibleRoot,
    #[error(transparent)]
    Euclid(#[from] EuclidError),
    #[error(transparent)]
    Parabola(#[from] ParabolaError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Diagonal-tangency result: the rectangle diagonal opposite the middle
/// cusp, its contact point with the outer parabola, and the checks that it
/// really is a tangent through the cusp bisector.
#[derive(Clone, Debug)]
pub struct DiagonalTangency {
    pub line: Line,
    pub contact: Point,
    pub records: Vec<VerificationRecord>,
}

/// The line tangent to both inner parabolas, with its contact points.
#[derive(Clone, Copy, Debug)]
pub struct CommonTangent {
    pub line: Line,
    pub slope: f64,
    pub touch_left: Point,
    pub touch_right: Point,
}

/// The two tangent triangles cut off by the common tangent, with Lambert and
/// similarity checks.
#[derive(Clone, Debug)]
pub struct LowerTangentTriangles {
    pub left: [Point; 3],
    pub right: [Point; 3],
    pub records: Vec<VerificationRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Parbelos {
    cusps: [Point; 3],
    upper: VerticalParabola,
    lower_left: VerticalParabola,
    lower_right: VerticalParabola,
}

impl Parbelos {
    /// Parbelos over cusps at the given abscissae on the x-axis.
    pub fn from_cusps(x1: f64, x2: f64, x3: f64) -> Result<Self, ParbelosError> {
        if !(x1.is_finite() && x2.is_finite() && x3.is_finite()) {
            return Err(ParbelosError::NonFiniteCusp);
        }
        if !(x1 < x2 && x2 < x3) {
            return Err(ParbelosError::CuspsNotStrictlyOrdered);
        }
        let ctx = ToleranceContext::for_scale(x3 - x1);
        let cusp = |x: f64| Point::new(x, 0.0);
        Ok(Self {
            cusps: [cusp(x1), cusp(x2), cusp(x3)],
            upper: VerticalParabola::from_latus_rectum(cusp(x1), cusp(x3), &ctx)?,
            lower_left: VerticalParabola::from_latus_rectum(cusp(x1), cusp(x2), &ctx)?,
            lower_right: VerticalParabola::from_latus_rectum(cusp(x2), cusp(x3), &ctx)?,
        })
    }

    pub fn cusps(&self) -> [Point; 3] {
        self.cusps
    }

    pub fn upper(&self) -> &VerticalParabola {
        &self.upper
    }

    pub fn lower_left(&self) -> &VerticalParabola {
        &self.lower_left
    }

    pub fn lower_right(&self) -> &VerticalParabola {
        &self.lower_right
    }

    /// Outer span width (the characteristic figure scale).
    pub fn width(&self) -> f64 {
        self.cusps[2].x - self.cusps[0].x
    }

    /// Position of the middle cusp as a fraction of the outer span.
    pub fn division_ratio(&self) -> f64 {
        (self.cusps[1].x - self.cusps[0].x) / self.width()
    }

    /// Default tolerance context scaled to this figure.
    pub fn tolerance(&self) -> ToleranceContext {
        ToleranceContext::for_scale(self.width())
    }

    /// Normalized parameters: quarter outer span and half left span. All the
    /// closed forms below are stated in terms of these two lengths.
    fn params(&self) -> (f64, f64) {
        (
            self.upper.focal_length(),
            self.lower_left.focal_parameter(),
        )
    }

    fn normalized(&self) -> (VerticalParabola, VerticalParabola, VerticalParabola) {
        let (a, b) = self.params();
        let p = |left: f64, right: f64| {
            VerticalParabola::from_latus_rectum(
                Point::new(left, 0.0),
                Point::new(right, 0.0),
                &ToleranceContext::for_scale(4.0 * a),
            )
            .expect("normalized latus rectum is horizontal and non-degenerate")
        };
        (p(0.0, 4.0 * a), p(0.0, 2.0 * b), p(2.0 * b, 4.0 * a))
    }

    /// Tangency structure at the three cusps: tangent to the outer arc at the
    /// outer cusps, a right angle (not tangency) at the middle cusp.
    pub fn cusp_tangency_report(&self, ctx: &ToleranceContext) -> [VerificationRecord; 3] {
        let [c1, c2, c3] = self.cusps;
        let slope_tol = ctx.abs_floor.max(ctx.rel_tol);
        let at_c1 = VerificationRecord::compare(
            "cusp1_tangent_slopes_match",
            self.upper.slope_at(c1.x),
            self.lower_left.slope_at(c1.x),
            slope_tol,
        )
        .with_witness("C1", c1);
        // Inner tangents at the middle cusp have slopes -1 and +1: their gap
        // of 2 is the right angle that rules tangency out.
        let at_c2 = VerificationRecord::compare(
            "cusp2_right_angle_not_tangent",
            self.lower_right.slope_at(c2.x) - self.lower_left.slope_at(c2.x),
            2.0,
            slope_tol,
        )
        .with_witness("C2", c2);
        let at_c3 = VerificationRecord::compare(
            "cusp3_tangent_slopes_match",
            self.upper.slope_at(c3.x),
            self.lower_right.slope_at(c3.x),
            slope_tol,
        )
        .with_witness("C3", c3);
        [at_c1, at_c2, at_c3]
    }

    /// Lengths of the outer arc and of the two inner arcs summed; equal by
    /// the proportionality of arc length to the semi-latus rectum.
    pub fn boundary_lengths(&self) -> (f64, f64) {
        let upper = self.upper.latus_arc_length();
        let lower_sum = self.lower_left.latus_arc_length() + self.lower_right.latus_arc_length();
        (upper, lower_sum)
    }

    /// Sub-parbeloses under the two inner arcs, each similar to this one
    /// (same division ratio).
    pub fn subdivide_similar(&self) -> (Parbelos, Parbelos) {
        let [c1, c2, c3] = self.cusps;
        let ratio = self.division_ratio();
        let left = Parbelos::from_cusps(c1.x, c1.x + ratio * (c2.x - c1.x), c2.x)
            .expect("left subdivision keeps strict cusp order");
        let right = Parbelos::from_cusps(c2.x, c2.x + ratio * (c3.x - c2.x), c3.x)
            .expect("right subdivision keeps strict cusp order");
        (left, right)
    }

    /// Quadrilateral on the middle cusp and the three parabola vertices, in
    /// cyclic order.
    pub fn cusp_vertices_parallelogram(&self) -> Quadrilateral {
        let x1 = self.cusps[0].x;
        let (a, b) = self.params();
        let shift = |p: Point| Point::new(p.x + x1, p.y);
        let corners = [
            Point::new(2.0 * b, 0.0),
            Point::new(b, 0.5 * b),
            Point::new(2.0 * a, a),
            Point::new(2.0 * a + b, a - 0.5 * b),
        ]
        .map(shift);
        Quadrilateral::new(corners, &self.tolerance())
            .expect("cusp-vertices parallelogram is simple for ordered cusps")
    }

    /// Region area: outer segment minus the two inner segments.
    pub fn parbelos_area(&self) -> f64 {
        let [c1, c2, c3] = self.cusps;
        let outer = self
            .upper
            .segment_area(c1.x, c3.x)
            .expect("outer cusps are ordered");
        let left = self
            .lower_left
            .segment_area(c1.x, c2.x)
            .expect("left cusps are ordered");
        let right = self
            .lower_right
            .segment_area(c2.x, c3.x)
            .expect("right cusps are ordered");
        outer - left - right
    }

    /// Corners of the rectangle enclosed by the four cusp tangents, in
    /// normalized coordinates: middle cusp, then the three tangent meets.
    fn rectangle_corners_normalized(&self) -> [Point; 4] {
        let (a, b) = self.params();
        [
            Point::new(2.0 * b, 0.0),
            Point::new(b, b),
            Point::new(2.0 * a, 2.0 * a),
            Point::new(2.0 * a + b, 2.0 * a - b),
        ]
    }

    /// Circumcenter of the tangent rectangle in cusp-normalized coordinates:
    /// the midpoint of the diagonal away from the middle cusp.
    pub fn rectangle_circumcenter_normalized(&self) -> Point {
        let corners = self.rectangle_corners_normalized();
        corners[1].midpoint(corners[3])
    }

    /// Rectangle enclosed by the four tangents at the cusps (the two outer
    /// tangents of slope +/-1 and the two inner-arc tangents at the middle
    /// cusp).
    pub fn tangent_rectangle(&self) -> Quadrilateral {
        let x1 = self.cusps[0].x;
        let corners = self
            .rectangle_corners_normalized()
            .map(|p| Point::new(p.x + x1, p.y));
        Quadrilateral::new(corners, &self.tolerance())
            .expect("tangent rectangle is simple for ordered cusps")
    }

    /// The rectangle diagonal opposite the middle cusp is tangent to the
    /// outer parabola, touching on the vertical bisector of the right angle
    /// at that cusp.
    pub fn diagonal_tangency(&self, ctx: &ToleranceContext) -> DiagonalTangency {
        let x1 = self.cusps[0].x;
        let (a, b) = self.params();
        let (upper_n, _, _) = self.normalized();
        let [_, t1n, _, t3n] = self.rectangle_corners_normalized();
        let line_n = Line::through_points(t1n, t3n)
            .expect("rectangle diagonal endpoints are distinct");
        let slope = line_n.slope().expect("diagonal of width 2a is never vertical");

        let disc = upper_n
            .intersection_discriminant(&line_n)
            .expect("diagonal is not vertical");
        let contact_xn = upper_n.touch_x_for_slope(slope);
        let contact_n = Point::new(contact_xn, upper_n.eval(contact_xn));
        let contact = Point::new(contact_n.x + x1, contact_n.y);

        let disc_tol = 0.1 * ctx.rel_tol * ctx.scale * ctx.scale;
        let records = vec![
            VerificationRecord::residual("property5_diagonal_double_contact", disc, disc_tol)
                .with_witness("T1", Point::new(t1n.x + x1, t1n.y))
                .with_witness("T3", Point::new(t3n.x + x1, t3n.y)),
            VerificationRecord::compare(
                "property5_contact_on_cusp_bisector",
                contact_xn,
                2.0 * b,
                ctx.length_tol(),
            )
            .with_witness("contact", contact)
            .with_witness("C2", self.cusps[1]),
            VerificationRecord::compare(
                "property5_contact_slope_match",
                upper_n.slope_at(contact_xn),
                (a - b) / a,
                ctx.abs_floor.max(ctx.rel_tol),
            ),
        ];
        DiagonalTangency {
            line: Line::through(contact, slope),
            contact,
            records,
        }
    }

    /// Circumcircle of the tangent rectangle, centered on the diagonal
    /// midpoint, together with the check that the outer parabola's focus
    /// lies on it.
    pub fn rectangle_circumcircle(&self, ctx: &ToleranceContext) -> (Circle, VerificationRecord) {
        let x1 = self.cusps[0].x;
        let corners_n = self.rectangle_corners_normalized();
        let center_n = corners_n[1].midpoint(corners_n[3]);
        let radius = distance(center_n, corners_n[0]);
        let center = Point::new(center_n.x + x1, center_n.y);
        let circle = Circle { center, radius };

        let focus_n = Point::new(self.upper.focal_parameter(), 0.0);
        let record = VerificationRecord::compare(
            "property6_focus_on_circumcircle",
            distance(center_n, focus_n),
            radius,
            ctx.tol_at(radius),
        )
        .with_witness("circumcenter", center)
        .with_witness("focus", self.upper.focus());
        (circle, record)
    }

    /// Line tangent to both inner parabolas.
    ///
    /// Equating the tangent intercepts of the two parabolas gives
    /// `(b - a)(m^2 + 1) + 2am = 0` in the normalized parameters; the two
    /// roots are reciprocal, and the admissible one is picked by requiring
    /// both touch points to lie strictly inside the open inner arcs.
    pub fn common_lower_tangent(&self) -> Result<CommonTangent, ParbelosError> {
        let x1 = self.cusps[0].x;
        let (a, b) = self.params();
        let coeff = b - a;
        let candidates: Vec<f64> = if coeff == 0.0 {
            // Symmetric parbelos: the equation degenerates to 2am = 0.
            vec![0.0]
        } else {
            match solve_quadratic(coeff, 2.0 * a, coeff)? {
                QuadraticRoots::TwoReal(lo, hi) => vec![lo, hi],
                QuadraticRoots::Double(r) => vec![r],
                // The discriminant 4a^2 - 4(b-a)^2 is positive whenever
                // 0 < 2b < 4a, so real roots always exist here.
                QuadraticRoots::ComplexPair => vec![],
            }
        };
        for m in candidates {
            let touch_left_n = b * (1.0 - m);
            let touch_right_n = (2.0 * a + b) - (2.0 * a - b) * m;
            if touch_left_n > 0.0
                && touch_left_n < 2.0 * b
                && touch_right_n > 2.0 * b
                && touch_right_n < 4.0 * a
            {
                let tl = touch_left_n + x1;
                let tr = touch_right_n + x1;
                return Ok(CommonTangent {
                    line: self.lower_left.tangent_with_slope(m),
                    slope: m,
                    touch_left: Point::new(tl, self.lower_left.eval(tl)),
                    touch_right: Point::new(tr, self.lower_right.eval(tr)),
                });
            }
        }
        Err(ParbelosError::NoAdmissibleRoot)
    }

    /// Double-contact residuals of the common tangent against both inner
    /// parabolas, computed in normalized coordinates.
    pub fn common_tangent_discriminants(&self) -> Result<(f64, f64), ParbelosError> {
        let tangent = self.common_lower_tangent()?;
        let (_, left_n, right_n) = self.normalized();
        let line_n = left_n.tangent_with_slope(tangent.slope);
        let disc_left = left_n
            .intersection_discriminant(&line_n)
            .expect("slope tangents are never vertical");
        let disc_right = right_n
            .intersection_discriminant(&line_n)
            .expect("slope tangents are never vertical");
        Ok((disc_left, disc_right))
    }

    /// The two tangent triangles bounded by the cusp tangents and the common
    /// tangent, with their Lambert circumcircle checks and the similarity
    /// check (both triangles have tangent slopes {+1, -1, m}).
    pub fn lower_tangent_triangles(
        &self,
        ctx: &ToleranceContext,
    ) -> Result<LowerTangentTriangles, ParbelosError> {
        let tangent = self.common_lower_tangent()?;
        let [c1, c2, c3] = self.cusps;

        let triangle = |parabola: &VerticalParabola,
                        xa: f64,
                        xb: f64|
         -> Result<([Point; 3], Line, Line), ParbelosError> {
            let ta = parabola.tangent_at(xa);
            let tb = parabola.tangent_at(xb);
            let apex = euclid::line_intersection(&ta, &tb, ctx)?;
            let va = euclid::line_intersection(&ta, &tangent.line, ctx)?;
            let vb = euclid::line_intersection(&tb, &tangent.line, ctx)?;
            Ok(([apex, va, vb], ta, tb))
        };

        let (left, la, lb) = triangle(&self.lower_left, c1.x, c2.x)?;
        let (right, ra, rb) = triangle(&self.lower_right, c2.x, c3.x)?;

        let left_lambert = self
            .lower_left
            .lambert_check(&la, &lb, &tangent.line, ctx)?
            .renamed("common_tangent_left_lambert_focus");
        let right_lambert = self
            .lower_right
            .lambert_check(&ra, &rb, &tangent.line, ctx)?
            .renamed("common_tangent_right_lambert_focus");

        let angles_left = triangle_angles(&left);
        let angles_right = triangle_angles(&right);
        let angle_dev = angles_left
            .iter()
            .zip(angles_right.iter())
            .map(|(l, r)| (l - r).abs())
            .fold(0.0, f64::max);
        let similar = VerificationRecord::residual(
            "common_tangent_triangles_similar_angles",
            angle_dev,
            ctx.abs_floor.max(ctx.rel_tol),
        );

        let expected_ratio =
            self.lower_left.focal_parameter() / self.lower_right.focal_parameter();
        let sides_left = sorted_sides(&left);
        let sides_right = sorted_sides(&right);
        let ratio_dev = sides_left
            .iter()
            .zip(sides_right.iter())
            .map(|(l, r)| (l / r - expected_ratio).abs())
            .fold(0.0, f64::max);
        let ratio = VerificationRecord::compare(
            "common_tangent_similarity_ratio",
            expected_ratio + ratio_dev,
            expected_ratio,
            ctx.abs_floor.max(ctx.rel_tol * expected_ratio.max(1.0)),
        )
        .with_witness("touch_left", tangent.touch_left)
        .with_witness("touch_right", tangent.touch_right);

        Ok(LowerTangentTriangles {
            left,
            right,
            records: vec![left_lambert, right_lambert, similar, ratio],
        })
    }
}

fn sorted_sides(tri: &[Point; 3]) -> [f64; 3] {
    let mut sides = [
        distance(tri[0], tri[1]),
        distance(tri[1], tri[2]),
        distance(tri[2], tri[0]),
    ];
    sides.sort_by(f64::total_cmp);
    sides
}

/// Interior angles in ascending order.
fn triangle_angles(tri: &[Point; 3]) -> [f64; 3] {
    let mut angles = [0.0; 3];
    for i in 0..3 {
        let u = tri[(i + 1) % 3] - tri[i];
        let v = tri[(i + 2) % 3] - tri[i];
        angles[i] = u.cross(v).abs().atan2(u.dot(v));
    }
    angles.sort_by(f64::total_cmp);
    angles
}
