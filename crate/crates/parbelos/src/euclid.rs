//! Minimal Euclidean primitives: points, lines, circles, quadrilaterals,
//! and the incidence/tangency predicates the constructions rely on.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::numeric::ToleranceContext;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EuclidError {
    #[error("non-finite coordinate")]
    NonFiniteCoordinate,
    #[error("degenerate polygon")]
    DegeneratePolygon,
    #[error("collinear points")]
    CollinearPoints,
    #[error("parallel lines")]
    ParallelLines,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("non-positive radius")]
    NonPositiveRadius,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

/// Displacement between points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }
}

impl Sub for Point {
    type Output = Vec2;
    fn sub(self, rhs: Point) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, rhs: Vec2) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<Vec2> for Point {
    type Output = Point;
    fn sub(self, rhs: Vec2) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

pub fn distance(p: Point, q: Point) -> f64 {
    (p - q).norm()
}

/// A line in slope-intercept form, or a vertical line `x = c`.
///
/// The dual representation keeps the vertical angle bisector at the middle
/// cusp representable without slope overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Line {
    SlopeIntercept { slope: f64, intercept: f64 },
    Vertical { x: f64 },
}

impl Line {
    pub fn through(p: Point, slope: f64) -> Line {
        Line::SlopeIntercept {
            slope,
            intercept: p.y - slope * p.x,
        }
    }

    pub fn vertical(x: f64) -> Line {
        Line::Vertical { x }
    }

    pub fn through_points(p: Point, q: Point) -> Result<Line, EuclidError> {
        if p == q {
            return Err(EuclidError::CoincidentPoints);
        }
        if p.x == q.x {
            return Ok(Line::Vertical { x: p.x });
        }
        Ok(Line::through(p, (q.y - p.y) / (q.x - p.x)))
    }

    pub fn slope(&self) -> Option<f64> {
        match *self {
            Line::SlopeIntercept { slope, .. } => Some(slope),
            Line::Vertical { .. } => None,
        }
    }

    pub fn y_at(&self, x: f64) -> Option<f64> {
        match *self {
            Line::SlopeIntercept { slope, intercept } => Some(slope * x + intercept),
            Line::Vertical { .. } => None,
        }
    }

    /// Euclidean distance from a point to this line.
    pub fn distance_to(&self, p: Point) -> f64 {
        match *self {
            Line::SlopeIntercept { slope, intercept } => {
                (slope * p.x - p.y + intercept).abs() / (1.0 + slope * slope).sqrt()
            }
            Line::Vertical { x } => (p.x - x).abs(),
        }
    }

    pub fn contains(&self, p: Point, ctx: &ToleranceContext) -> bool {
        self.distance_to(p) <= ctx.length_tol()
    }
}

pub fn line_intersection(a: &Line, b: &Line, ctx: &ToleranceContext) -> Result<Point, EuclidError> {
    match (*a, *b) {
        (Line::Vertical { .. }, Line::Vertical { .. }) => Err(EuclidError::ParallelLines),
        (Line::Vertical { x }, Line::SlopeIntercept { slope, intercept })
        | (Line::SlopeIntercept { slope, intercept }, Line::Vertical { x }) => {
            Ok(Point::new(x, slope * x + intercept))
        }
        (
            Line::SlopeIntercept {
                slope: m1,
                intercept: k1,
            },
            Line::SlopeIntercept {
                slope: m2,
                intercept: k2,
            },
        ) => {
            let slope_tol = ctx.abs_floor.max(ctx.rel_tol * m1.abs().max(m2.abs()).max(1.0));
            if (m1 - m2).abs() <= slope_tol {
                return Err(EuclidError::ParallelLines);
            }
            let x = (k2 - k1) / (m1 - m2);
            Ok(Point::new(x, m1 * x + k1))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self, EuclidError> {
        if !(center.is_finite() && radius.is_finite()) {
            return Err(EuclidError::NonFiniteCoordinate);
        }
        if radius <= 0.0 {
            return Err(EuclidError::NonPositiveRadius);
        }
        Ok(Self { center, radius })
    }
}

pub fn point_on_circle(p: Point, c: &Circle, ctx: &ToleranceContext) -> bool {
    (distance(p, c.center) - c.radius).abs() <= ctx.tol_at(c.radius)
}

pub fn line_tangent_to_circle(l: &Line, c: &Circle, ctx: &ToleranceContext) -> bool {
    (l.distance_to(c.center) - c.radius).abs() <= ctx.tol_at(c.radius)
}

/// Circle through three non-collinear points.
///
/// Coordinates are reduced about the centroid before solving, which keeps the
/// cancellation error bounded by the triangle size rather than the distance
/// from the origin. Collinearity threshold: triangle area at or below
/// `abs_floor * scale^2`.
pub fn circumcircle(
    p1: Point,
    p2: Point,
    p3: Point,
    ctx: &ToleranceContext,
) -> Result<Circle, EuclidError> {
    if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
        return Err(EuclidError::NonFiniteCoordinate);
    }
    let cx = (p1.x + p2.x + p3.x) / 3.0;
    let cy = (p1.y + p2.y + p3.y) / 3.0;
    let (a, b, c) = (
        Point::new(p1.x - cx, p1.y - cy),
        Point::new(p2.x - cx, p2.y - cy),
        Point::new(p3.x - cx, p3.y - cy),
    );
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    // Triangle area is |d| / 4.
    if d.abs() <= 4.0 * ctx.abs_floor * ctx.scale * ctx.scale {
        return Err(EuclidError::CollinearPoints);
    }
    let (ua, ub, uc) = (
        a.x * a.x + a.y * a.y,
        b.x * b.x + b.y * b.y,
        c.x * c.x + c.y * c.y,
    );
    let ox = (ua * (b.y - c.y) + ub * (c.y - a.y) + uc * (a.y - b.y)) / d;
    let oy = (ua * (c.x - b.x) + ub * (a.x - c.x) + uc * (b.x - a.x)) / d;
    let center = Point::new(ox + cx, oy + cy);
    // Averaging the three distances keeps the result symmetric in the inputs.
    let radius = (distance(center, p1) + distance(center, p2) + distance(center, p3)) / 3.0;
    Ok(Circle { center, radius })
}

/// Four vertices in cyclic order forming a simple polygon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrilateral {
    vertices: [Point; 4],
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

impl Quadrilateral {
    /// Validates distinct vertices, non-degenerate area, and simplicity.
    pub fn new(vertices: [Point; 4], ctx: &ToleranceContext) -> Result<Self, EuclidError> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(EuclidError::NonFiniteCoordinate);
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if distance(vertices[i], vertices[j]) <= ctx.abs_floor {
                    return Err(EuclidError::DegeneratePolygon);
                }
            }
        }
        let q = Self { vertices };
        if q.signed_area().abs() <= ctx.abs_floor * ctx.scale * ctx.scale {
            return Err(EuclidError::DegeneratePolygon);
        }
        let [v0, v1, v2, v3] = vertices;
        if segments_cross(v0, v1, v2, v3) || segments_cross(v1, v2, v3, v0) {
            return Err(EuclidError::DegeneratePolygon);
        }
        Ok(q)
    }

    pub fn vertices(&self) -> [Point; 4] {
        self.vertices
    }

    fn signed_area(&self) -> f64 {
        let v = &self.vertices;
        let mut acc = 0.0;
        for i in 0..4 {
            let j = (i + 1) % 4;
            acc += v[i].x * v[j].y - v[j].x * v[i].y;
        }
        0.5 * acc
    }

    /// Mismatch between opposite edge vectors; zero for a parallelogram.
    pub fn parallelogram_mismatch(&self) -> f64 {
        let [v0, v1, v2, v3] = self.vertices;
        let e01 = v1 - v0;
        let e32 = v2 - v3;
        let e12 = v2 - v1;
        let e03 = v3 - v0;
        (e01 - e32).norm().max((e12 - e03).norm())
    }

    /// Dot product of two adjacent edges; zero for a right angle.
    pub fn corner_dot(&self) -> f64 {
        let [v0, v1, v2, _] = self.vertices;
        (v1 - v0).dot(v2 - v1)
    }

    pub fn max_edge(&self) -> f64 {
        let v = &self.vertices;
        (0..4)
            .map(|i| (v[(i + 1) % 4] - v[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// Positive polygon area regardless of orientation.
pub fn shoelace_area(q: &Quadrilateral) -> f64 {
    q.signed_area().abs()
}

pub fn is_parallelogram(q: &Quadrilateral, ctx: &ToleranceContext) -> bool {
    q.parallelogram_mismatch() <= ctx.tol_at(q.max_edge())
}

pub fn is_rectangle(q: &Quadrilateral, ctx: &ToleranceContext) -> bool {
    if !is_parallelogram(q, ctx) {
        return false;
    }
    let [v0, v1, v2, _] = q.vertices;
    let e1 = v1 - v0;
    let e2 = v2 - v1;
    q.corner_dot().abs() <= ctx.abs_floor.max(ctx.rel_tol * e1.norm() * e2.norm())
}
