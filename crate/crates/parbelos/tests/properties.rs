//! Property-based invariants across the geometry modules: random parabolas,
//! random cusp triples, and random rigid motions.

use proptest::prelude::*;

use parbelos::arbelos::{locus_equivalence, Arbelos, InscribedCircleFamily};
use parbelos::euclid::{
    circumcircle, distance, point_on_circle, shoelace_area, Point, Quadrilateral,
};
use parbelos::numeric::{arc_length_quadrature, solve_quadratic, QuadraticRoots, ToleranceContext};
use parbelos::parabola::{universal_parabolic_constant, VerticalParabola};
use parbelos::parbelos::Parbelos;

fn ctx() -> ToleranceContext {
    ToleranceContext::default()
}

/// Strategy for strictly ordered cusp triples with non-degenerate spans.
fn cusp_triples() -> impl Strategy<Value = [f64; 3]> {
    (-5.0..5.0f64, 0.05..6.0f64, 0.05..6.0f64)
        .prop_map(|(x1, left, right)| [x1, x1 + left, x1 + left + right])
}

fn parabolas() -> impl Strategy<Value = VerticalParabola> {
    (-5.0..5.0f64, -5.0..5.0f64, 0.2..8.0f64).prop_map(|(x, y, width)| {
        VerticalParabola::from_latus_rectum(
            Point::new(x, y),
            Point::new(x + width, y),
            &ToleranceContext::for_scale(width),
        )
        .expect("generated latus rectum is horizontal")
    })
}

proptest! {
    #[test]
    fn approx_eq_is_symmetric_and_reflexive(x in -1e6..1e6f64, y in -1e6..1e6f64) {
        let c = ctx();
        prop_assert!(c.approx_eq(x, x).unwrap());
        prop_assert_eq!(c.approx_eq(x, y).unwrap(), c.approx_eq(y, x).unwrap());
    }

    #[test]
    fn quadratic_roots_have_small_residuals(
        c2 in -10.0..10.0f64,
        c1 in -10.0..10.0f64,
        c0 in -10.0..10.0f64,
    ) {
        prop_assume!(c2.abs() > 1e-3);
        let disc = c1 * c1 - 4.0 * c2 * c0;
        prop_assume!(disc.abs() > 1e-6);
        let bound = 1e-10 * c2.abs().max(c1.abs()).max(c0.abs());
        if let QuadraticRoots::TwoReal(lo, hi) = solve_quadratic(c2, c1, c0).unwrap() {
            for r in [lo, hi] {
                let residual = (c2 * r * r + c1 * r + c0).abs();
                prop_assert!(residual <= bound, "residual {residual} at root {r}");
            }
            prop_assert!(lo < hi);
        }
    }

    #[test]
    fn quadrature_splits_additively(split in 0.05..0.95f64) {
        let tol = 1e-10;
        let x0 = -1.0;
        let x1 = 2.0;
        let xm = x0 + split * (x1 - x0);
        let f = |x: f64| (x * 0.7).cos();
        let whole = arc_length_quadrature(f, x0, x1, tol).unwrap();
        let left = arc_length_quadrature(f, x0, xm, tol).unwrap();
        let right = arc_length_quadrature(f, xm, x1, tol).unwrap();
        prop_assert!((left + right - whole).abs() <= 2.0 * tol);
    }

    #[test]
    fn closed_form_arc_length_matches_quadrature(
        parabola in parabolas(),
        t0 in 0.0..0.45f64,
        t1 in 0.55..1.0f64,
    ) {
        let x0 = parabola.latus_left().x + t0 * parabola.latus_width();
        let x1 = parabola.latus_left().x + t1 * parabola.latus_width();
        let closed = parabola.arc_length_between(x0, x1).unwrap();
        let fx = parabola.focus().x;
        let half_p = parabola.focal_parameter() / 2.0;
        let oracle =
            arc_length_quadrature(|x| -(x - fx) / (2.0 * half_p), x0, x1, 1e-12).unwrap();
        prop_assert!(
            (closed - oracle).abs() <= 1e-10 * closed.max(1.0),
            "closed {closed} vs oracle {oracle}"
        );
    }

    #[test]
    fn focus_directrix_identity_holds(parabola in parabolas(), t in 0.0..1.0f64) {
        let x = parabola.latus_left().x + t * parabola.latus_width();
        let q = Point::new(x, parabola.eval(x));
        let to_focus = distance(q, parabola.focus());
        let to_directrix = (q.y - parabola.directrix_y()).abs();
        prop_assert!((to_focus - to_directrix).abs() <= 1e-10 * parabola.latus_width().max(1.0));
    }

    #[test]
    fn arc_length_over_semi_latus_is_constant(parabola in parabolas()) {
        let ratio = parabola.latus_arc_length() / parabola.focal_parameter();
        let upc = universal_parabolic_constant();
        prop_assert!((ratio - upc).abs() <= 1e-10 * upc);
    }

    #[test]
    fn archimedes_ratio_is_four_thirds(
        parabola in parabolas(),
        t0 in 0.0..0.45f64,
        t1 in 0.55..1.0f64,
    ) {
        let x0 = parabola.latus_left().x + t0 * parabola.latus_width();
        let x1 = parabola.latus_left().x + t1 * parabola.latus_width();
        let segment = parabola.segment_area(x0, x1).unwrap();
        let triangle = parabola.inscribed_triangle_area(x0, x1).unwrap();
        prop_assert!((segment / triangle - 4.0 / 3.0).abs() <= 1e-12 * (4.0 / 3.0));
    }

    #[test]
    fn tangent_with_slope_round_trips_through_tangent_at(
        parabola in parabolas(),
        t in 0.05..0.95f64,
    ) {
        let x = parabola.latus_left().x + t * parabola.latus_width();
        let slope = parabola.slope_at(x);
        let line = parabola.tangent_with_slope(slope);
        let y = line.y_at(x).expect("slope tangents are never vertical");
        prop_assert!((y - parabola.eval(x)).abs() <= 1e-9 * parabola.latus_width().max(1.0));
    }

    #[test]
    fn lambert_holds_for_random_tangent_triples(
        parabola in parabolas(),
        t0 in 0.0..0.30f64,
        t1 in 0.35..0.63f64,
        t2 in 0.68..1.0f64,
    ) {
        let w = parabola.latus_width();
        let x = |t: f64| parabola.latus_left().x + t * w;
        let c = ToleranceContext::for_scale(w);
        let record = parabola
            .lambert_check(
                &parabola.tangent_at(x(t0)),
                &parabola.tangent_at(x(t1)),
                &parabola.tangent_at(x(t2)),
                &c,
            )
            .unwrap();
        prop_assert!(record.pass, "residual {} tol {}", record.residual, record.tolerance_used);
        prop_assert!(record.residual <= 1e-9 * w.max(1.0) * 10.0);
    }

    #[test]
    fn circumcircle_is_permutation_invariant(
        ax in -5.0..5.0f64, ay in -5.0..5.0f64,
        bx in -5.0..5.0f64, by in -5.0..5.0f64,
        cx in -5.0..5.0f64, cy in -5.0..5.0f64,
    ) {
        let (a, b, c) = (Point::new(ax, ay), Point::new(bx, by), Point::new(cx, cy));
        let area = 0.5 * ((b - a).cross(c - a)).abs();
        prop_assume!(area > 1e-3);
        let tctx = ctx();
        let base = circumcircle(a, b, c, &tctx).unwrap();
        for (p, q, r) in [(b, c, a), (c, a, b), (b, a, c), (a, c, b), (c, b, a)] {
            let other = circumcircle(p, q, r, &tctx).unwrap();
            prop_assert!(distance(base.center, other.center) <= 1e-12 * tctx.scale.max(base.radius));
            prop_assert!((base.radius - other.radius).abs() <= 1e-12 * base.radius.max(tctx.scale));
        }
        for p in [a, b, c] {
            prop_assert!(point_on_circle(p, &base, &tctx));
        }
    }

    #[test]
    fn shoelace_area_is_rigid_motion_invariant(
        dx in -10.0..10.0f64,
        dy in -10.0..10.0f64,
        angle in 0.0..std::f64::consts::TAU,
    ) {
        let square = [
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(3.0, 2.0),
            Point::new(0.5, 1.5),
        ];
        let tctx = ctx();
        let base = shoelace_area(&Quadrilateral::new(square, &tctx).unwrap());
        let (s, c) = angle.sin_cos();
        let moved = square.map(|p| Point::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy));
        let moved_area = shoelace_area(&Quadrilateral::new(moved, &tctx).unwrap());
        prop_assert!((moved_area - base).abs() <= 1e-9 * base);
    }

    #[test]
    fn parbelos_properties_hold_for_random_cusps(cusps in cusp_triples()) {
        let [x1, x2, x3] = cusps;
        let pb = Parbelos::from_cusps(x1, x2, x3).unwrap();
        let scale = pb.width();

        // Property 1: equal boundary lengths.
        let (upper, lower_sum) = pb.boundary_lengths();
        prop_assert!((upper - lower_sum).abs() / upper <= 1e-9);

        // Property 2: middle sub-arcs congruent, at half the harmonic mean.
        let (left, right) = pb.subdivide_similar();
        let m_left = left.lower_right().latus_arc_length();
        let m_right = right.lower_left().latus_arc_length();
        let l_orig = pb.lower_left().latus_arc_length();
        let r_orig = pb.lower_right().latus_arc_length();
        let half_harmonic = l_orig * r_orig / (l_orig + r_orig);
        prop_assert!((m_left - m_right).abs() <= 1e-9 * m_left);
        prop_assert!((m_left - half_harmonic).abs() <= 1e-9 * half_harmonic);

        // Property 3: area is 4/3 of the cusp-vertices parallelogram.
        let parallelogram = shoelace_area(&pb.cusp_vertices_parallelogram());
        prop_assert!((pb.parbelos_area() / parallelogram - 4.0 / 3.0).abs() <= 1e-9 * (4.0 / 3.0));

        // Property 4: area is 2/3 of the tangent rectangle.
        let rectangle = shoelace_area(&pb.tangent_rectangle());
        prop_assert!((pb.parbelos_area() / rectangle - 2.0 / 3.0).abs() <= 1e-9 * (2.0 / 3.0));

        // Property 5: diagonal touches on the vertical through the middle cusp.
        let tctx = pb.tolerance();
        let diag = pb.diagonal_tangency(&tctx);
        prop_assert!((diag.contact.x - x2).abs() <= 1e-9 * scale);

        // Property 6: upper focus on the rectangle circumcircle.
        let (circle, record) = pb.rectangle_circumcircle(&tctx);
        prop_assert!(record.pass);
        prop_assert!(
            (distance(circle.center, pb.upper().focus()) - circle.radius).abs() <= 1e-9 * scale
        );

        // Common tangent: double contact with both inner parabolas.
        let (dl, dr) = pb.common_tangent_discriminants().unwrap();
        prop_assert!(dl.abs() <= 1e-10 * scale * scale, "left disc {dl}");
        prop_assert!(dr.abs() <= 1e-10 * scale * scale, "right disc {dr}");
    }

    #[test]
    fn parbelos_verdicts_are_similarity_invariant(
        cusps in cusp_triples(),
        lambda in 0.2..5.0f64,
        shift in -20.0..20.0f64,
    ) {
        let [x1, x2, x3] = cusps;
        let pb = Parbelos::from_cusps(x1, x2, x3).unwrap();
        let scaled = Parbelos::from_cusps(
            lambda * x1 + shift,
            lambda * x2 + shift,
            lambda * x3 + shift,
        )
        .unwrap();

        // Lengths scale linearly, areas quadratically.
        let (u1, _) = pb.boundary_lengths();
        let (u2, _) = scaled.boundary_lengths();
        prop_assert!((u2 - lambda * u1).abs() <= 1e-9 * u2);
        prop_assert!(
            (scaled.parbelos_area() - lambda * lambda * pb.parbelos_area()).abs()
                <= 1e-9 * scaled.parbelos_area()
        );

        // Verdicts unchanged.
        let a = pb.diagonal_tangency(&pb.tolerance());
        let b = scaled.diagonal_tangency(&scaled.tolerance());
        for (ra, rb) in a.records.iter().zip(b.records.iter()) {
            prop_assert_eq!(ra.pass, rb.pass);
        }
        let ta = pb.lower_tangent_triangles(&pb.tolerance()).unwrap();
        let tb = scaled.lower_tangent_triangles(&scaled.tolerance()).unwrap();
        for (ra, rb) in ta.records.iter().zip(tb.records.iter()) {
            prop_assert_eq!(ra.pass, rb.pass);
        }
    }

    #[test]
    fn parbelos_scalars_are_reflection_invariant(cusps in cusp_triples()) {
        let [x1, x2, x3] = cusps;
        let pb = Parbelos::from_cusps(x1, x2, x3).unwrap();
        let mirrored = Parbelos::from_cusps(-x3, -x2, -x1).unwrap();

        prop_assert!((pb.parbelos_area() - mirrored.parbelos_area()).abs() <= 1e-9 * pb.parbelos_area());
        let (u1, l1) = pb.boundary_lengths();
        let (u2, l2) = mirrored.boundary_lengths();
        prop_assert!((u1 - u2).abs() <= 1e-12 * u1);
        prop_assert!((l1 - l2).abs() <= 1e-12 * l1);

        let t1 = pb.common_lower_tangent().unwrap();
        let t2 = mirrored.common_lower_tangent().unwrap();
        prop_assert!((t1.slope + t2.slope).abs() <= 1e-12 * (1.0 + t1.slope.abs()));
        prop_assert!((t1.touch_left.x + t2.touch_right.x).abs() <= 1e-9 * pb.width());
    }

    #[test]
    fn arbelos_facts_hold_for_random_cusps(cusps in cusp_triples()) {
        let [x1, x2, x3] = cusps;
        let ar = Arbelos::from_cusps(x1, x2, x3).unwrap();
        let pb = Parbelos::from_cusps(x1, x2, x3).unwrap();
        let tctx = ar.tolerance();

        let ratio = ar.arbelos_area() / shoelace_area(&ar.cusp_midpoints_rectangle());
        let half_pi = 0.5 * std::f64::consts::PI;
        prop_assert!((ratio - half_pi).abs() <= 1e-12 * half_pi);

        let dev = ar
            .cusp_midpoints_rectangle()
            .vertices()
            .iter()
            .zip(pb.tangent_rectangle().vertices().iter())
            .map(|(m, t)| distance(*m, *t))
            .fold(0.0, f64::max);
        prop_assert!(dev <= 1e-12 * ar.width());

        for rec in ar.pairwise_tangency(&tctx) {
            prop_assert!(rec.pass);
        }

        for rec in locus_equivalence(&ar, &pb, &tctx).unwrap() {
            prop_assert!(rec.pass, "{}: {}", rec.property_name, rec.residual);
        }
    }

    #[test]
    fn inscribed_circles_touch_host_and_diameter(
        cusps in cusp_triples(),
        t in 0.01..0.99f64,
    ) {
        let [x1, x2, x3] = cusps;
        let ar = Arbelos::from_cusps(x1, x2, x3).unwrap();
        for semi in ar.semicircles() {
            let family = InscribedCircleFamily::new(*semi);
            let u = -semi.radius + 2.0 * semi.radius * t;
            let circle = family.inscribed_circle(u).unwrap();
            let internal = distance(circle.center, semi.center) - (semi.radius - circle.radius);
            prop_assert!(internal.abs() <= 1e-12 * ar.width());
            prop_assert!((circle.center.y - circle.radius).abs() <= 1e-12 * ar.width());
        }
    }
}

/// Composite Simpson on a plain integrand, independent of the closed forms.
fn simpson_integral<F: Fn(f64) -> f64>(f: F, x0: f64, x1: f64, panels: usize) -> f64 {
    let n = panels * 2;
    let h = (x1 - x0) / n as f64;
    let mut acc = f(x0) + f(x1);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(x0 + h * i as f64);
    }
    acc * h / 3.0
}

#[test]
fn parbelos_area_matches_region_integration_oracle() {
    // Integrate the strip between the outer arc and the inner arcs directly,
    // bypassing the segment-area closed forms.
    for cusps in [[0.0, 1.0, 4.0], [0.0, 2.0, 4.0], [-3.0, -0.7, 2.9]] {
        let [x1, x2, x3] = cusps;
        let pb = Parbelos::from_cusps(x1, x2, x3).unwrap();
        let upper = *pb.upper();
        let lower_left = *pb.lower_left();
        let lower_right = *pb.lower_right();
        let strip = |x: f64| {
            let lower = if x <= x2 {
                lower_left.eval(x)
            } else {
                lower_right.eval(x)
            };
            upper.eval(x) - lower
        };
        // Split at the middle cusp where the lower boundary changes arc.
        let oracle = simpson_integral(strip, x1, x2, 4096) + simpson_integral(strip, x2, x3, 4096);
        let closed = pb.parbelos_area();
        assert!(
            (closed - oracle).abs() < 1e-9 * closed,
            "cusps {cusps:?}: closed {closed} vs integral {oracle}"
        );
    }
}
