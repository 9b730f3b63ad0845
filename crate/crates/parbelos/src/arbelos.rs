//! The companion arbelos: three pairwise tangent semicircles over the same
//! cusps, the cusp-midpoints rectangle, and the inscribed-circle locus that
//! reconstructs the parbelos.

use thiserror::Error;

use crate::euclid::{distance, Circle, Point, Quadrilateral};
use crate::numeric::ToleranceContext;
use crate::parbelos::Parbelos;
use crate::report::VerificationRecord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArbelosError {
    #[error("cusps not strictly ordered")]
    CuspsNotStrictlyOrdered,
    #[error("non-finite cusp coordinate")]
    NonFiniteCusp,
    #[error("parameter at or beyond cusp")]
    ParameterAtOrBeyondCusp,
    #[error("arbelos and parbelos cusps differ")]
    CuspMismatch,
}

/// Upward-bulging semicircle with its diameter on the cusp line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Semicircle {
    pub center: Point,
    pub radius: f64,
}

impl Semicircle {
    /// Topmost point of the arc.
    pub fn arc_midpoint(&self) -> Point {
        Point::new(self.center.x, self.center.y + self.radius)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arbelos {
    cusps: [Point; 3],
    upper: Semicircle,
    lower_left: Semicircle,
    lower_right: Semicircle,
}

impl Arbelos {
    pub fn from_cusps(x1: f64, x2: f64, x3: f64) -> Result<Self, ArbelosError> {
        if !(x1.is_finite() && x2.is_finite() && x3.is_finite()) {
            return Err(ArbelosError::NonFiniteCusp);
        }
        if !(x1 < x2 && x2 < x3) {
            return Err(ArbelosError::CuspsNotStrictlyOrdered);
        }
        let semi = |left: f64, right: f64| Semicircle {
            center: Point::new(0.5 * (left + right), 0.0),
            radius: 0.5 * (right - left),
        };
        Ok(Self {
            cusps: [
                Point::new(x1, 0.0),
                Point::new(x2, 0.0),
                Point::new(x3, 0.0),
            ],
            upper: semi(x1, x3),
            lower_left: semi(x1, x2),
            lower_right: semi(x2, x3),
        })
    }

    pub fn cusps(&self) -> [Point; 3] {
        self.cusps
    }

    pub fn upper(&self) -> &Semicircle {
        &self.upper
    }

    pub fn lower_left(&self) -> &Semicircle {
        &self.lower_left
    }

    pub fn lower_right(&self) -> &Semicircle {
        &self.lower_right
    }

    pub fn semicircles(&self) -> [&Semicircle; 3] {
        [&self.upper, &self.lower_left, &self.lower_right]
    }

    pub fn width(&self) -> f64 {
        self.cusps[2].x - self.cusps[0].x
    }

    pub fn tolerance(&self) -> ToleranceContext {
        ToleranceContext::for_scale(self.width())
    }

    /// Region area: upper semicircle minus the two lower ones,
    /// `(pi/2) (R^2 - r_l^2 - r_r^2)`.
    pub fn arbelos_area(&self) -> f64 {
        let (ru, rl, rr) = (
            self.upper.radius,
            self.lower_left.radius,
            self.lower_right.radius,
        );
        0.5 * std::f64::consts::PI * (ru * ru - rl * rl - rr * rr)
    }

    /// Quadrilateral on the middle cusp and the three semicircular arc
    /// midpoints; a rectangle that coincides with the tangent rectangle of
    /// the parbelos over the same cusps.
    pub fn cusp_midpoints_rectangle(&self) -> Quadrilateral {
        let corners = [
            self.cusps[1],
            self.lower_left.arc_midpoint(),
            self.upper.arc_midpoint(),
            self.lower_right.arc_midpoint(),
        ];
        Quadrilateral::new(corners, &self.tolerance())
            .expect("cusp-midpoints rectangle is simple for ordered cusps")
    }

    /// Records for the pairwise tangency of the semicircles: the lower two
    /// touch the upper one internally at the outer cusps and each other
    /// externally at the middle cusp.
    pub fn pairwise_tangency(&self, ctx: &ToleranceContext) -> [VerificationRecord; 3] {
        let tol = ctx.machine_tol(self.width());
        let internal = |host: &Semicircle, inner: &Semicircle, name: &str, at: Point| {
            VerificationRecord::compare(
                name,
                distance(host.center, inner.center),
                host.radius - inner.radius,
                tol,
            )
            .with_witness("contact", at)
        };
        let external = VerificationRecord::compare(
            "arbelos_lower_semicircles_touch_externally",
            distance(self.lower_left.center, self.lower_right.center),
            self.lower_left.radius + self.lower_right.radius,
            tol,
        )
        .with_witness("contact", self.cusps[1]);
        [
            internal(
                &self.upper,
                &self.lower_left,
                "arbelos_left_semicircle_touches_upper",
                self.cusps[0],
            ),
            internal(
                &self.upper,
                &self.lower_right,
                "arbelos_right_semicircle_touches_upper",
                self.cusps[2],
            ),
            external,
        ]
    }
}

/// Circles inscribed in one semicircle (tangent to the diameter line and
/// internally tangent to the arc), parameterized by the horizontal offset of
/// their centers from the semicircle center.
///
/// The offset doubles as the latus-arc abscissa of the locus parabola, which
/// makes the locus comparison a direct curve evaluation.
#[derive(Clone, Copy, Debug)]
pub struct InscribedCircleFamily {
    host: Semicircle,
}

impl InscribedCircleFamily {
    pub fn new(host: Semicircle) -> Self {
        Self { host }
    }

    pub fn host(&self) -> &Semicircle {
        &self.host
    }

    /// Inscribed-circle radius at offset `u`: `(R^2 - u^2) / (2R)`.
    pub fn radius_at(&self, u: f64) -> f64 {
        let big_r = self.host.radius;
        (big_r * big_r - u * u) / (2.0 * big_r)
    }

    /// Member circle at offset `u` from the host center, `|u| < R`.
    pub fn inscribed_circle(&self, u: f64) -> Result<Circle, ArbelosError> {
        if !u.is_finite() || u.abs() >= self.host.radius {
            return Err(ArbelosError::ParameterAtOrBeyondCusp);
        }
        let r = self.radius_at(u);
        Ok(Circle {
            center: Point::new(self.host.center.x + u, self.host.center.y + r),
            radius: r,
        })
    }
}

/// Checks, per semicircle, that inscribed-circle centers trace the matching
/// latus rectum arc of the parbelos and that arc points reconstruct
/// inscribed circles. Grid of 101 interior offsets per direction.
pub fn locus_equivalence(
    ar: &Arbelos,
    pb: &Parbelos,
    ctx: &ToleranceContext,
) -> Result<Vec<VerificationRecord>, ArbelosError> {
    let ar_cusps = ar.cusps();
    let pb_cusps = pb.cusps();
    let match_tol = ctx.machine_tol(ar.width());
    for (a, p) in ar_cusps.iter().zip(pb_cusps.iter()) {
        if distance(*a, *p) > match_tol {
            return Err(ArbelosError::CuspMismatch);
        }
    }

    const GRID: usize = 101;
    let tol = 0.1 * ctx.rel_tol * ctx.scale;
    let pairs = [
        (ar.upper(), pb.upper(), "upper"),
        (ar.lower_left(), pb.lower_left(), "left"),
        (ar.lower_right(), pb.lower_right(), "right"),
    ];
    let mut records = Vec::with_capacity(2 * pairs.len());
    for (semi, parabola, which) in pairs {
        let family = InscribedCircleFamily::new(*semi);
        let big_r = semi.radius;

        let mut center_residual: f64 = 0.0;
        let mut inscribed_residual: f64 = 0.0;
        for i in 0..GRID {
            let u = -big_r + 2.0 * big_r * (i + 1) as f64 / (GRID + 1) as f64;
            let circle = family
                .inscribed_circle(u)
                .expect("grid offsets are strictly interior");
            // Center-on-arc direction.
            let on_arc = (circle.center.y - parabola.eval(circle.center.x)).abs();
            center_residual = center_residual.max(on_arc);
            // Arc-point-to-inscribed-circle direction: the candidate circle
            // over an arc point has radius equal to its height; check the
            // internal tangency against the host arc.
            let x = semi.center.x + u;
            let y = parabola.eval(x);
            let tangency =
                (distance(Point::new(x, y), semi.center) - (big_r - y)).abs();
            inscribed_residual = inscribed_residual.max(tangency);
        }
        records.push(VerificationRecord::residual(
            format!("property7_locus_centers_on_arc_{which}"),
            center_residual,
            tol,
        ));
        records.push(VerificationRecord::residual(
            format!("property7_arc_points_are_inscribed_{which}"),
            inscribed_residual,
            tol,
        ));
    }
    Ok(records)
}
