//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`) before asserting.
//!
//! Tolerances are pinned here, in code; nothing is deferred to later
//! calibration.

use std::process::Command;
use std::time::Instant;

use parbelos::arbelos::{locus_equivalence, Arbelos};
use parbelos::batch::map_batch;
use parbelos::euclid::{circumcircle, distance, is_rectangle, shoelace_area, Point};
use parbelos::numeric::arc_length_quadrature;
use parbelos::parabola::{universal_parabolic_constant, VerticalParabola};
use parbelos::parbelos::Parbelos;
use parbelos::verify::{
    lambert_random_trials, run_suite_batch, sample_cusp_triples, Selection, SuiteOptions,
};
use parbelos::ToleranceContext;

const TRIPLE_COUNT: usize = 1000;
const SEED: u64 = 0;

fn report(n: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("acceptance criterion {n:02} [{verdict}] {name}: {detail}");
}

fn triples() -> Vec<[f64; 3]> {
    sample_cusp_triples(SEED, TRIPLE_COUNT)
}

fn parbeloses() -> Vec<Parbelos> {
    map_batch(&triples(), |t| {
        Parbelos::from_cusps(t[0], t[1], t[2]).expect("sampled cusps are ordered")
    })
}

#[test]
fn criterion_01_universal_parabolic_constant() {
    let started = Instant::now();
    let ctx = ToleranceContext::default();
    // Semi-latus rectum 1: latus rectum endpoints (-1,0) and (1,0).
    let parabola =
        VerticalParabola::from_latus_rectum(Point::new(-1.0, 0.0), Point::new(1.0, 0.0), &ctx)
            .unwrap();
    assert_eq!(parabola.focal_parameter(), 1.0);
    let closed = parabola.latus_arc_length();
    let focal = parabola.focal_length();
    let oracle = arc_length_quadrature(|x| -x / (2.0 * focal), -1.0, 1.0, 1e-12).unwrap();
    let elapsed = started.elapsed();

    let agreement = (closed - oracle).abs();
    let against_reference = (closed - 2.2955871494).abs().max((oracle - 2.2955871494).abs());
    let pass = agreement < 1e-10 && against_reference < 1e-10 && elapsed.as_secs_f64() < 1.0;
    report(
        1,
        "universal parabolic constant",
        pass,
        &format!(
            "closed {closed:.12}, oracle {oracle:.12}, |diff| {agreement:.3e}, vs 2.2955871494 {against_reference:.3e}, {:.3} s",
            elapsed.as_secs_f64()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_02_boundary_lengths_equal() {
    let worst = parbeloses()
        .iter()
        .map(|pb| {
            let (upper, lower) = pb.boundary_lengths();
            (upper - lower).abs() / upper
        })
        .fold(0.0, f64::max);
    let pass = worst < 1e-9;
    report(
        2,
        "boundary lengths equal on 1000 seeded triples",
        pass,
        &format!("max relative deviation {worst:.3e} (< 1e-9)"),
    );
    assert!(pass);
}

#[test]
fn criterion_03_middle_subarcs_at_half_harmonic_mean() {
    let mut worst_congruent: f64 = 0.0;
    let mut worst_harmonic: f64 = 0.0;
    for pb in parbeloses() {
        let (left, right) = pb.subdivide_similar();
        let middle_left = left.lower_right().latus_arc_length();
        let middle_right = right.lower_left().latus_arc_length();
        let l = pb.lower_left().latus_arc_length();
        let r = pb.lower_right().latus_arc_length();
        let half_harmonic = l * r / (l + r);
        worst_congruent = worst_congruent.max((middle_left - middle_right).abs() / middle_left);
        worst_harmonic = worst_harmonic.max((middle_left - half_harmonic).abs() / half_harmonic);
    }
    // Worked case: cusps (0,1,4) give middle sub-arcs of 0.375 * P.
    let worked = Parbelos::from_cusps(0.0, 1.0, 4.0).unwrap();
    let (left, _) = worked.subdivide_similar();
    let expected = 0.375 * universal_parabolic_constant();
    let worked_dev =
        (left.lower_right().latus_arc_length() - expected).abs() / expected;

    let pass = worst_congruent < 1e-9 && worst_harmonic < 1e-9 && worked_dev < 1e-9;
    report(
        3,
        "middle sub-arcs congruent at half the harmonic mean",
        pass,
        &format!(
            "max congruence dev {worst_congruent:.3e}, max harmonic dev {worst_harmonic:.3e}, worked case dev {worked_dev:.3e}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_04_area_is_four_thirds_of_parallelogram() {
    let worst = parbeloses()
        .iter()
        .map(|pb| {
            let ratio = pb.parbelos_area() / shoelace_area(&pb.cusp_vertices_parallelogram());
            (ratio - 4.0 / 3.0).abs() / (4.0 / 3.0)
        })
        .fold(0.0, f64::max);
    let worked = (Parbelos::from_cusps(0.0, 1.0, 4.0).unwrap().parbelos_area() - 1.0).abs();
    let pass = worst < 1e-9 && worked < 1e-12;
    report(
        4,
        "parbelos area = 4/3 cusp-vertices parallelogram",
        pass,
        &format!("max ratio dev {worst:.3e} (< 1e-9), worked-case |area - 1| {worked:.3e} (< 1e-12)"),
    );
    assert!(pass);
}

#[test]
fn criterion_05_area_is_two_thirds_of_tangent_rectangle() {
    let mut worst: f64 = 0.0;
    let mut rectangles_ok = true;
    for pb in parbeloses() {
        let rect = pb.tangent_rectangle();
        rectangles_ok &= is_rectangle(&rect, &pb.tolerance());
        let ratio = pb.parbelos_area() / shoelace_area(&rect);
        worst = worst.max((ratio - 2.0 / 3.0).abs() / (2.0 / 3.0));
    }
    let pass = worst < 1e-9 && rectangles_ok;
    report(
        5,
        "parbelos area = 2/3 tangent rectangle",
        pass,
        &format!("max ratio dev {worst:.3e} (< 1e-9), all quadrilaterals rectangular: {rectangles_ok}"),
    );
    assert!(pass);
}

#[test]
fn criterion_06_diagonal_tangency() {
    let mut worst_disc: f64 = 0.0;
    let mut worst_contact: f64 = 0.0;
    for pb in parbeloses() {
        let scale = pb.width();
        let ctx = pb.tolerance();
        let result = pb.diagonal_tangency(&ctx);
        let disc = result
            .records
            .iter()
            .find(|r| r.property_name == "property5_diagonal_double_contact")
            .unwrap()
            .residual;
        worst_disc = worst_disc.max(disc / (scale * scale));
        worst_contact = worst_contact.max((result.contact.x - pb.cusps()[1].x).abs() / scale);
    }
    let pass = worst_disc < 1e-10 && worst_contact < 1e-9;
    report(
        6,
        "rectangle diagonal tangent to upper parabola at the cusp bisector",
        pass,
        &format!(
            "max |disc|/scale^2 {worst_disc:.3e} (< 1e-10), max contact offset/scale {worst_contact:.3e} (< 1e-9)"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_07_circumcircle_through_upper_focus() {
    let mut worst_focus: f64 = 0.0;
    let mut worst_center: f64 = 0.0;
    for pb in parbeloses() {
        let scale = pb.width();
        let ctx = pb.tolerance();
        let (circle, _) = pb.rectangle_circumcircle(&ctx);
        let focus_dev =
            (distance(circle.center, pb.upper().focus()) - circle.radius).abs() / scale;
        worst_focus = worst_focus.max(focus_dev);

        let a = pb.upper().focal_length();
        let b = pb.lower_left().focal_parameter();
        let center_dev = distance(
            pb.rectangle_circumcenter_normalized(),
            Point::new(a + b, a),
        );
        worst_center = worst_center.max(center_dev);
    }
    let pass = worst_focus < 1e-9 && worst_center < 1e-12;
    report(
        7,
        "tangent-rectangle circumcircle through the upper focus",
        pass,
        &format!(
            "max focus residual/scale {worst_focus:.3e} (< 1e-9), max normalized center offset {worst_center:.3e} (< 1e-12)"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_08_lambert_suite() {
    let worst = lambert_random_trials(SEED, 1000);
    let pass = worst < 1e-9;
    report(
        8,
        "Lambert focus-on-circumcircle over 1000 random tangent triangles",
        pass,
        &format!("max residual/scale {worst:.3e} (< 1e-9)"),
    );
    assert!(pass);
}

#[test]
fn criterion_09_common_tangent_and_similar_triangles() {
    let pb = Parbelos::from_cusps(0.0, 1.0, 4.0).unwrap();
    let ctx = pb.tolerance();
    let scale = pb.width();

    let tangent = pb.common_lower_tangent().unwrap();
    let slope_dev = (tangent.slope - (2.0 - 3.0f64.sqrt())).abs();

    let (disc_left, disc_right) = pb.common_tangent_discriminants().unwrap();

    let triangles = pb.lower_tangent_triangles(&ctx).unwrap();
    let foci = [Point::new(0.5, 0.0), Point::new(2.5, 0.0)];
    let mut worst_focus: f64 = 0.0;
    for (tri, focus) in [&triangles.left, &triangles.right].iter().zip(foci) {
        let circle = circumcircle(tri[0], tri[1], tri[2], &ctx).unwrap();
        worst_focus = worst_focus.max((distance(circle.center, focus) - circle.radius).abs());
    }

    let angle_record = triangles
        .records
        .iter()
        .find(|r| r.property_name == "common_tangent_triangles_similar_angles")
        .unwrap();

    let pass = slope_dev < 1e-12
        && disc_left.abs() < 1e-10
        && disc_right.abs() < 1e-10
        && worst_focus < 1e-9 * scale
        && angle_record.residual < 1e-9;
    report(
        9,
        "common lower tangent: slope 2-sqrt(3), Lambert circles, similar triangles",
        pass,
        &format!(
            "slope dev {slope_dev:.3e} (< 1e-12), discs {:.3e}/{:.3e} (< 1e-10), focus residual {worst_focus:.3e} (< {:.1e}), angle dev {:.3e} rad (< 1e-9)",
            disc_left.abs(),
            disc_right.abs(),
            1e-9 * scale,
            angle_record.residual
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_10_arbelos_facts() {
    let mut worst_ratio: f64 = 0.0;
    let mut worst_vertex: f64 = 0.0;
    let mut worst_center: f64 = 0.0;
    let half_pi = 0.5 * std::f64::consts::PI;
    for t in triples() {
        let ar = Arbelos::from_cusps(t[0], t[1], t[2]).unwrap();
        let pb = Parbelos::from_cusps(t[0], t[1], t[2]).unwrap();
        let scale = ar.width();
        let rect = ar.cusp_midpoints_rectangle();

        let ratio = ar.arbelos_area() / shoelace_area(&rect);
        worst_ratio = worst_ratio.max((ratio - half_pi).abs() / half_pi);

        let vertex_dev = rect
            .vertices()
            .iter()
            .zip(pb.tangent_rectangle().vertices().iter())
            .map(|(m, t)| distance(*m, *t))
            .fold(0.0, f64::max);
        worst_vertex = worst_vertex.max(vertex_dev / scale);

        let v = rect.vertices();
        let circle = circumcircle(v[0], v[1], v[2], &ar.tolerance()).unwrap();
        let center_dev = (distance(circle.center, ar.upper().center) - circle.radius).abs();
        worst_center = worst_center.max(center_dev / scale);
    }
    let pass = worst_ratio < 1e-12 && worst_vertex < 1e-12 && worst_center < 1e-12;
    report(
        10,
        "arbelos: pi/2 area ratio, rectangle coincidence, circumcircle through upper center",
        pass,
        &format!(
            "max ratio dev {worst_ratio:.3e} (< 1e-12), max vertex offset/scale {worst_vertex:.3e} (< 1e-12), max center residual/scale {worst_center:.3e} (< 1e-12)"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_11_inscribed_circle_locus() {
    let mut worst: f64 = 0.0;
    for t in triples() {
        let ar = Arbelos::from_cusps(t[0], t[1], t[2]).unwrap();
        let pb = Parbelos::from_cusps(t[0], t[1], t[2]).unwrap();
        let records = locus_equivalence(&ar, &pb, &ar.tolerance()).unwrap();
        assert_eq!(records.len(), 6, "three semicircles, both directions");
        for rec in records {
            worst = worst.max(rec.residual / ar.width());
        }
    }
    let pass = worst < 1e-10;
    report(
        11,
        "inscribed-circle locus matches the parbelos in both directions",
        pass,
        &format!("max residual/scale over 101-point grids {worst:.3e} (< 1e-10)"),
    );
    assert!(pass);
}

#[test]
fn criterion_12_determinism_and_runtime() {
    let bin = env!("CARGO_BIN_EXE_parbelos");
    let verify_args = ["verify", "--cusps", "0", "1", "4", "--seed", "7"];
    let first = Command::new(bin).args(verify_args).output().unwrap();
    let second = Command::new(bin).args(verify_args).output().unwrap();
    let verify_deterministic = first.stdout == second.stdout && first.status.code() == Some(0);

    let dir = tempfile::tempdir().unwrap();
    let mut renders = Vec::new();
    for name in ["a.svg", "b.svg"] {
        let path = dir.path().join(name);
        let out = Command::new(bin)
            .args([
                "render",
                "two-circumcircles",
                "--cusps",
                "0",
                "1",
                "4",
                "-o",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        renders.push(std::fs::read(&path).unwrap());
    }
    let render_deterministic = renders[0] == renders[1];

    let started = Instant::now();
    let reports = run_suite_batch(&triples(), &Selection::All, &SuiteOptions::default()).unwrap();
    let elapsed = started.elapsed();
    let suite_ok = reports.len() == TRIPLE_COUNT && reports.iter().all(|r| r.all_pass());
    let fast_enough = elapsed.as_secs_f64() < 10.0;

    let pass = verify_deterministic && render_deterministic && suite_ok && fast_enough;
    report(
        12,
        "byte-deterministic outputs and full-suite runtime",
        pass,
        &format!(
            "verify deterministic: {verify_deterministic}, render deterministic: {render_deterministic}, 1000-triple suite all-pass: {suite_ok} in {:.2} s (< 10 s)",
            elapsed.as_secs_f64()
        ),
    );
    assert!(pass);
}
