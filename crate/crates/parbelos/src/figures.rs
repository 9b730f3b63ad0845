//! Deterministic SVG scenes for the constructions.
//!
//! Scenes hold geometry in model coordinates (y up); the y-axis is flipped
//! only at render time. Output is byte-deterministic: fixed element order,
//! fixed 6-decimal coordinate formatting, no timestamps.

use std::fmt::Write as _;

use thiserror::Error;

use crate::arbelos::{Arbelos, InscribedCircleFamily, Semicircle};
use crate::euclid::{Circle, Point};
use crate::parabola::VerticalParabola;
use crate::parbelos::Parbelos;
use crate::Error as CrateError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FigureError {
    #[error("nothing to render")]
    NothingToRender,
    #[error("unknown figure name: {0}")]
    UnknownFigure(String),
}

/// Default number of polyline segments per parabolic or circular arc.
pub const DEFAULT_ARC_SAMPLES: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Solid,
    Dashed,
}

/// How a parabolic arc is emitted.
///
/// The sampled polyline is trivially checkable; the quadratic Bezier is
/// exact and compact (a parabola arc is a quadratic Bezier whose control
/// point is the intersection of the endpoint tangents).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcMode {
    Polyline { samples: usize },
    QuadraticBezier,
}

#[derive(Clone, Debug)]
pub enum Element {
    ParabolaArc {
        parabola: VerticalParabola,
        x0: f64,
        x1: f64,
        mode: ArcMode,
        stroke: Stroke,
    },
    /// Upward-bulging semicircular arc, sampled as a polyline.
    SemicircleArc {
        center: Point,
        radius: f64,
        samples: usize,
        stroke: Stroke,
    },
    CircleOutline {
        circle: Circle,
        stroke: Stroke,
    },
    Segment {
        from: Point,
        to: Point,
        stroke: Stroke,
    },
    LabeledPoint {
        at: Point,
        label: String,
    },
    FilledRegion {
        boundary: Vec<Point>,
    },
}

impl Element {
    pub fn parabola_arc(parabola: VerticalParabola, x0: f64, x1: f64) -> Element {
        Element::ParabolaArc {
            parabola,
            x0,
            x1,
            mode: ArcMode::Polyline {
                samples: DEFAULT_ARC_SAMPLES,
            },
            stroke: Stroke::Solid,
        }
    }

    pub fn dashed(mut self) -> Element {
        match &mut self {
            Element::ParabolaArc { stroke, .. }
            | Element::SemicircleArc { stroke, .. }
            | Element::CircleOutline { stroke, .. }
            | Element::Segment { stroke, .. } => *stroke = Stroke::Dashed,
            Element::LabeledPoint { .. } | Element::FilledRegion { .. } => {}
        }
        self
    }

    pub fn semicircle_arc(semi: &Semicircle) -> Element {
        Element::SemicircleArc {
            center: semi.center,
            radius: semi.radius,
            samples: DEFAULT_ARC_SAMPLES,
            stroke: Stroke::Solid,
        }
    }

    pub fn segment(from: Point, to: Point) -> Element {
        Element::Segment {
            from,
            to,
            stroke: Stroke::Solid,
        }
    }

    pub fn point(at: Point, label: impl Into<String>) -> Element {
        Element::LabeledPoint {
            at,
            label: label.into(),
        }
    }

    fn bounds(&self) -> (Point, Point) {
        match self {
            Element::ParabolaArc {
                parabola, x0, x1, ..
            } => {
                let mut ys = vec![parabola.eval(*x0), parabola.eval(*x1)];
                let vx = parabola.vertex().x;
                if vx > *x0 && vx < *x1 {
                    ys.push(parabola.vertex().y);
                }
                let (ymin, ymax) = ys
                    .iter()
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| {
                        (lo.min(*y), hi.max(*y))
                    });
                (Point::new(*x0, ymin), Point::new(*x1, ymax))
            }
            Element::SemicircleArc { center, radius, .. } => (
                Point::new(center.x - radius, center.y),
                Point::new(center.x + radius, center.y + radius),
            ),
            Element::CircleOutline { circle, .. } => (
                Point::new(circle.center.x - circle.radius, circle.center.y - circle.radius),
                Point::new(circle.center.x + circle.radius, circle.center.y + circle.radius),
            ),
            Element::Segment { from, to, .. } => (
                Point::new(from.x.min(to.x), from.y.min(to.y)),
                Point::new(from.x.max(to.x), from.y.max(to.y)),
            ),
            Element::LabeledPoint { at, .. } => (*at, *at),
            Element::FilledRegion { boundary } => {
                let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
                let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
                for p in boundary {
                    lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                    hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
                }
                (lo, hi)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Style {
    pub stroke_width: f64,
    pub font_size: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewbox {
    pub min: Point,
    pub max: Point,
}

impl Viewbox {
    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }
}

#[derive(Clone, Debug)]
pub struct Scene {
    pub elements: Vec<Element>,
    pub viewbox: Viewbox,
    pub style: Style,
}

impl Scene {
    /// Scene with a viewbox padded 8% beyond the joint element bounds and a
    /// style scaled to the figure size.
    pub fn new(elements: Vec<Element>) -> Scene {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for e in &elements {
            let (elo, ehi) = e.bounds();
            lo = Point::new(lo.x.min(elo.x), lo.y.min(elo.y));
            hi = Point::new(hi.x.max(ehi.x), hi.y.max(ehi.y));
        }
        if !lo.is_finite() || !hi.is_finite() {
            lo = Point::new(0.0, 0.0);
            hi = Point::new(1.0, 1.0);
        }
        let dim = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let pad = 0.08 * dim;
        Scene {
            elements,
            viewbox: Viewbox {
                min: Point::new(lo.x - pad, lo.y - pad),
                max: Point::new(hi.x + pad, hi.y + pad),
            },
            style: Style {
                stroke_width: 0.008 * dim,
                font_size: 0.045 * dim,
            },
        }
    }

    pub fn render(&self) -> Result<String, FigureError> {
        render_scene(self)
    }
}

fn fmt6(v: f64) -> String {
    // Below half the printed resolution the sign is noise; clamp so the
    // output never reads "-0.000000".
    let v = if v.abs() < 5e-7 { 0.0 } else { v };
    format!("{v:.6}")
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders a scene as an SVG 1.1 document. Byte-deterministic for identical
/// inputs; errors on an empty scene.
pub fn render_scene(scene: &Scene) -> Result<String, FigureError> {
    if scene.elements.is_empty() {
        return Err(FigureError::NothingToRender);
    }
    let vb = scene.viewbox;
    // SVG y grows downward; model points are flipped inside the same box.
    let flip = |p: Point| Point::new(p.x, vb.min.y + vb.max.y - p.y);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt6(vb.min.x),
        fmt6(vb.min.y),
        fmt6(vb.width()),
        fmt6(vb.height()),
    );
    let sw = fmt6(scene.style.stroke_width);
    let dash = format!(
        " stroke-dasharray=\"{} {}\"",
        fmt6(3.0 * scene.style.stroke_width),
        fmt6(2.0 * scene.style.stroke_width)
    );
    let dash_attr = |stroke: Stroke| match stroke {
        Stroke::Solid => String::new(),
        Stroke::Dashed => dash.clone(),
    };
    let polyline = |out: &mut String, pts: &[Point], stroke: Stroke| {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let q = flip(*p);
                format!("{},{}", fmt6(q.x), fmt6(q.y))
            })
            .collect();
        let _ = writeln!(
            out,
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\"{} points=\"{}\"/>",
            sw,
            dash_attr(stroke),
            coords.join(" ")
        );
    };

    for element in &scene.elements {
        match element {
            Element::FilledRegion { boundary } => {
                let coords: Vec<String> = boundary
                    .iter()
                    .map(|p| {
                        let q = flip(*p);
                        format!("{},{}", fmt6(q.x), fmt6(q.y))
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  <polygon fill=\"#e6e6e6\" stroke=\"none\" points=\"{}\"/>",
                    coords.join(" ")
                );
            }
            Element::ParabolaArc {
                parabola,
                x0,
                x1,
                mode,
                stroke,
            } => match mode {
                ArcMode::Polyline { samples } => {
                    let pts = sample_parabola(parabola, *x0, *x1, (*samples).max(1));
                    polyline(&mut out, &pts, *stroke);
                }
                ArcMode::QuadraticBezier => {
                    let p0 = Point::new(*x0, parabola.eval(*x0));
                    let p1 = Point::new(*x1, parabola.eval(*x1));
                    let ctrl = bezier_control(parabola, *x0, *x1);
                    let (q0, qc, q1) = (flip(p0), flip(ctrl), flip(p1));
                    let _ = writeln!(
                        out,
                        "  <path fill=\"none\" stroke=\"black\" stroke-width=\"{}\"{} d=\"M {} {} Q {} {} {} {}\"/>",
                        sw,
                        dash_attr(*stroke),
                        fmt6(q0.x),
                        fmt6(q0.y),
                        fmt6(qc.x),
                        fmt6(qc.y),
                        fmt6(q1.x),
                        fmt6(q1.y),
                    );
                }
            },
            Element::SemicircleArc {
                center,
                radius,
                samples,
                stroke,
            } => {
                let n = (*samples).max(1);
                let pts: Vec<Point> = (0..=n)
                    .map(|i| {
                        let theta = std::f64::consts::PI * (1.0 - i as f64 / n as f64);
                        Point::new(
                            center.x + radius * theta.cos(),
                            center.y + radius * theta.sin(),
                        )
                    })
                    .collect();
                polyline(&mut out, &pts, *stroke);
            }
            Element::CircleOutline { circle, stroke } => {
                let c = flip(circle.center);
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"{}/>",
                    fmt6(c.x),
                    fmt6(c.y),
                    fmt6(circle.radius),
                    sw,
                    dash_attr(*stroke),
                );
            }
            Element::Segment { from, to, stroke } => {
                let (a, b) = (flip(*from), flip(*to));
                let _ = writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{}\"{}/>",
                    fmt6(a.x),
                    fmt6(a.y),
                    fmt6(b.x),
                    fmt6(b.y),
                    sw,
                    dash_attr(*stroke),
                );
            }
            Element::LabeledPoint { at, label } => {
                let c = flip(*at);
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
                    fmt6(c.x),
                    fmt6(c.y),
                    fmt6(1.6 * scene.style.stroke_width),
                );
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"serif\">{}</text>",
                    fmt6(c.x + 0.4 * scene.style.font_size),
                    fmt6(c.y - 0.4 * scene.style.font_size),
                    fmt6(scene.style.font_size),
                    escape_text(label),
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn sample_parabola(parabola: &VerticalParabola, x0: f64, x1: f64, samples: usize) -> Vec<Point> {
    (0..=samples)
        .map(|i| {
            let x = x0 + (x1 - x0) * i as f64 / samples as f64;
            Point::new(x, parabola.eval(x))
        })
        .collect()
}

/// Control point of the exact quadratic Bezier form of the arc: the
/// intersection of the endpoint tangents.
fn bezier_control(parabola: &VerticalParabola, x0: f64, x1: f64) -> Point {
    let m0 = parabola.slope_at(x0);
    let m1 = parabola.slope_at(x1);
    let y0 = parabola.eval(x0);
    let y1 = parabola.eval(x1);
    // Tangent slopes of a vertical-axis parabola differ whenever x0 != x1.
    let x = (y1 - y0 + m0 * x0 - m1 * x1) / (m0 - m1);
    Point::new(x, y0 + m0 * (x - x0))
}

/// The named figures this library can draw for a cusp triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureKind {
    Arbelos,
    Parbelos,
    Parabola,
    SimilarParbeloses,
    ArbelosRectangle,
    Parallelogram,
    TangentRectangle,
    RectangleCircle,
    TwoCircumcircles,
    ArbelosParbelos,
    Locus,
}

impl FigureKind {
    pub const ALL: [FigureKind; 11] = [
        FigureKind::Arbelos,
        FigureKind::Parbelos,
        FigureKind::Parabola,
        FigureKind::SimilarParbeloses,
        FigureKind::ArbelosRectangle,
        FigureKind::Parallelogram,
        FigureKind::TangentRectangle,
        FigureKind::RectangleCircle,
        FigureKind::TwoCircumcircles,
        FigureKind::ArbelosParbelos,
        FigureKind::Locus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureKind::Arbelos => "arbelos",
            FigureKind::Parbelos => "parbelos",
            FigureKind::Parabola => "parabola",
            FigureKind::SimilarParbeloses => "similar-parbeloses",
            FigureKind::ArbelosRectangle => "arbelos-rectangle",
            FigureKind::Parallelogram => "parallelogram",
            FigureKind::TangentRectangle => "tangent-rectangle",
            FigureKind::RectangleCircle => "rectangle-circle",
            FigureKind::TwoCircumcircles => "two-circumcircles",
            FigureKind::ArbelosParbelos => "arbelos-parbelos",
            FigureKind::Locus => "locus",
        }
    }
}

impl std::str::FromStr for FigureKind {
    type Err = FigureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| FigureError::UnknownFigure(s.to_string()))
    }
}

/// Builds the scene for one named figure over the given cusps. Witness
/// points (foci, contact points, centers) are taken from the corresponding
/// verification records, so markers and reports always agree.
pub fn figure(kind: FigureKind, x1: f64, x2: f64, x3: f64) -> Result<Scene, CrateError> {
    let pb = Parbelos::from_cusps(x1, x2, x3)?;
    let ar = Arbelos::from_cusps(x1, x2, x3)?;
    let ctx = pb.tolerance();
    let [c1, c2, c3] = pb.cusps();

    let baseline = Element::segment(c1, c3);
    let cusp_labels = [
        Element::point(c1, "C1"),
        Element::point(c2, "C2"),
        Element::point(c3, "C3"),
    ];
    let parbelos_arcs = |pb: &Parbelos| {
        let [a, b, c] = pb.cusps();
        vec![
            Element::parabola_arc(*pb.upper(), a.x, c.x),
            Element::parabola_arc(*pb.lower_left(), a.x, b.x),
            Element::parabola_arc(*pb.lower_right(), b.x, c.x),
        ]
    };
    let arbelos_arcs = vec![
        Element::semicircle_arc(ar.upper()),
        Element::semicircle_arc(ar.lower_left()),
        Element::semicircle_arc(ar.lower_right()),
    ];
    let quad_edges = |corners: [Point; 4]| {
        (0..4)
            .map(|i| Element::segment(corners[i], corners[(i + 1) % 4]))
            .collect::<Vec<_>>()
    };
    let region = |arcs: &dyn Fn(f64) -> f64, lower: &dyn Fn(f64) -> f64| {
        let n = DEFAULT_ARC_SAMPLES;
        let mut boundary = Vec::with_capacity(2 * n + 2);
        for i in 0..=n {
            let x = c1.x + (c3.x - c1.x) * i as f64 / n as f64;
            boundary.push(Point::new(x, arcs(x)));
        }
        for i in (0..=n).rev() {
            let x = c1.x + (c3.x - c1.x) * i as f64 / n as f64;
            boundary.push(Point::new(x, lower(x)));
        }
        Element::FilledRegion { boundary }
    };

    let mut elements: Vec<Element> = Vec::new();
    match kind {
        FigureKind::Arbelos => {
            let upper = *ar.upper();
            let (ll, lr) = (*ar.lower_left(), *ar.lower_right());
            let semi_y = |s: &Semicircle, x: f64| {
                let dx = x - s.center.x;
                (s.radius * s.radius - dx * dx).max(0.0).sqrt()
            };
            elements.push(region(
                &|x| semi_y(&upper, x),
                &|x| {
                    if x <= c2.x {
                        semi_y(&ll, x)
                    } else {
                        semi_y(&lr, x)
                    }
                },
            ));
            elements.push(baseline);
            elements.extend(arbelos_arcs);
            elements.extend(cusp_labels);
        }
        FigureKind::Parbelos => {
            let (upper, ll, lr) = (*pb.upper(), *pb.lower_left(), *pb.lower_right());
            elements.push(region(
                &|x| upper.eval(x),
                &|x| {
                    if x <= c2.x {
                        ll.eval(x)
                    } else {
                        lr.eval(x)
                    }
                },
            ));
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            elements.extend(cusp_labels);
        }
        FigureKind::Parabola => {
            let p = pb.upper();
            elements.push(Element::parabola_arc(*p, c1.x, c3.x));
            elements.push(Element::segment(p.latus_left(), p.latus_right()));
            let directrix_y = p.directrix_y();
            elements.push(
                Element::segment(
                    Point::new(c1.x, directrix_y),
                    Point::new(c3.x, directrix_y),
                )
                .dashed(),
            );
            elements.push(Element::point(p.focus(), "F"));
            elements.push(Element::point(p.vertex(), "V"));
            elements.push(Element::point(Point::new(c3.x, directrix_y), "L"));
            elements.push(Element::point(p.latus_left(), "C1"));
            elements.push(Element::point(p.latus_right(), "C2"));
        }
        FigureKind::SimilarParbeloses => {
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            let (left, right) = pb.subdivide_similar();
            for sub in [&left, &right] {
                let [a, b, c] = sub.cusps();
                elements.push(Element::parabola_arc(*sub.lower_left(), a.x, b.x));
                elements.push(Element::parabola_arc(*sub.lower_right(), b.x, c.x));
            }
            elements.extend(cusp_labels);
        }
        FigureKind::ArbelosRectangle => {
            elements.push(baseline);
            elements.extend(arbelos_arcs);
            let rect = ar.cusp_midpoints_rectangle().vertices();
            elements.extend(quad_edges(rect));
            elements.push(Element::point(rect[1], "M1"));
            elements.push(Element::point(rect[2], "M2"));
            elements.push(Element::point(rect[3], "M3"));
            elements.push(Element::point(c2, "C2"));
        }
        FigureKind::Parallelogram => {
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            let quad = pb.cusp_vertices_parallelogram().vertices();
            elements.extend(quad_edges(quad));
            elements.push(Element::point(quad[1], "V1"));
            elements.push(Element::point(quad[2], "V2"));
            elements.push(Element::point(quad[3], "V3"));
            elements.extend(cusp_labels);
        }
        FigureKind::TangentRectangle => {
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            let rect = pb.tangent_rectangle().vertices();
            elements.extend(quad_edges(rect));
            let tangency = pb.diagonal_tangency(&ctx);
            elements.push(Element::segment(rect[1], rect[3]).dashed());
            elements.push(Element::segment(c2, tangency.contact).dashed());
            elements.push(Element::point(tangency.contact, "P"));
            elements.push(Element::point(rect[1], "T1"));
            elements.push(Element::point(rect[2], "T2"));
            elements.push(Element::point(rect[3], "T3"));
            elements.push(Element::point(c2, "C2"));
        }
        FigureKind::RectangleCircle => {
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            let rect = pb.tangent_rectangle().vertices();
            elements.extend(quad_edges(rect));
            let (circle, record) = pb.rectangle_circumcircle(&ctx);
            elements.push(Element::CircleOutline {
                circle,
                stroke: Stroke::Solid,
            });
            for witness in &record.witness_points {
                let label = match witness.name.as_str() {
                    "focus" => "F",
                    _ => "O",
                };
                elements.push(Element::point(witness.point, label));
            }
        }
        FigureKind::TwoCircumcircles => {
            elements.push(baseline);
            elements.extend(parbelos_arcs(&pb));
            let triangles = pb.lower_tangent_triangles(&ctx)?;
            for tri in [&triangles.left, &triangles.right] {
                for i in 0..3 {
                    elements.push(Element::segment(tri[i], tri[(i + 1) % 3]));
                }
                let circle = crate::euclid::circumcircle(tri[0], tri[1], tri[2], &ctx)?;
                elements.push(Element::CircleOutline {
                    circle,
                    stroke: Stroke::Solid,
                });
            }
            let tangent = pb.common_lower_tangent()?;
            elements.push(Element::segment(triangles.left[1], triangles.right[2]).dashed());
            elements.push(Element::point(pb.lower_left().focus(), "F1"));
            elements.push(Element::point(pb.lower_right().focus(), "F2"));
            elements.push(Element::point(tangent.touch_left, "P1"));
            elements.push(Element::point(tangent.touch_right, "P2"));
        }
        FigureKind::ArbelosParbelos => {
            elements.push(baseline);
            elements.extend(arbelos_arcs);
            let rect = ar.cusp_midpoints_rectangle().vertices();
            elements.extend(quad_edges(rect));
            let circle = crate::euclid::circumcircle(rect[0], rect[1], rect[2], &ctx)?;
            elements.push(Element::CircleOutline {
                circle,
                stroke: Stroke::Solid,
            });
            elements.push(Element::point(ar.upper().center, "O"));
        }
        FigureKind::Locus => {
            elements.push(baseline);
            elements.extend(arbelos_arcs);
            for arc in parbelos_arcs(&pb) {
                elements.push(arc.dashed());
            }
            let upper_family = InscribedCircleFamily::new(*ar.upper());
            for u in [-0.5 * ar.upper().radius, 0.0, 0.5 * ar.upper().radius] {
                let circle = upper_family.inscribed_circle(u)?;
                elements.push(Element::CircleOutline {
                    circle,
                    stroke: Stroke::Solid,
                });
            }
            let k = upper_family.inscribed_circle(0.0)?;
            elements.push(Element::point(k.center, "K"));
            for semi in [ar.lower_left(), ar.lower_right()] {
                let family = InscribedCircleFamily::new(*semi);
                let circle = family.inscribed_circle(0.0)?;
                elements.push(Element::CircleOutline {
                    circle,
                    stroke: Stroke::Solid,
                });
            }
            elements.extend(cusp_labels);
        }
    }
    Ok(Scene::new(elements))
}
