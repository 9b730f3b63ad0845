//! The verification suite: runs the numbered property checks plus the
//! auxiliary tangency and arbelos facts over one cusp triple, and batches
//! over many triples (data-parallel under the `parallel` feature).

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arbelos::{locus_equivalence, Arbelos};
use crate::batch;
use crate::euclid::{self, distance, Point};
use crate::numeric::ToleranceContext;
use crate::parabola::VerticalParabola;
use crate::parbelos::Parbelos;
use crate::report::VerificationRecord;
use crate::Error;

/// Which property groups to run. `All` adds the auxiliary groups (cusp
/// tangency, arbelos facts, common tangent) to the seven numbered ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    #[default]
    All,
    Properties(Vec<u8>),
}

impl FromStr for Selection {
    type Err = String;

    /// Accepts `all` or a comma-separated list of property numbers 1..=7.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.eq_ignore_ascii_case("all") {
            return Ok(Selection::All);
        }
        let mut numbers = Vec::new();
        for part in trimmed.split([',', ' ']).filter(|p| !p.is_empty()) {
            let n: u8 = part
                .parse()
                .map_err(|_| format!("invalid property selector '{part}'"))?;
            if !(1..=7).contains(&n) {
                return Err(format!("property number out of range: {n}"));
            }
            if !numbers.contains(&n) {
                numbers.push(n);
            }
        }
        if numbers.is_empty() {
            return Err("empty property selection".to_string());
        }
        numbers.sort_unstable();
        Ok(Selection::Properties(numbers))
    }
}

impl Selection {
    fn property_numbers(&self) -> Vec<u8> {
        match self {
            Selection::All => (1..=7).collect(),
            Selection::Properties(ns) => ns.clone(),
        }
    }

    fn include_auxiliary(&self) -> bool {
        matches!(self, Selection::All)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub rel_tol: f64,
    /// Seed for the randomized Lambert tangent trials inside property 6.
    pub seed: u64,
    pub lambert_trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            seed: 0,
            lambert_trials: 32,
        }
    }
}

/// Everything one suite run produced: per-check records plus the derived
/// scalar quantities of the figure.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub cusps: [f64; 3],
    pub records: Vec<VerificationRecord>,
    pub derived: BTreeMap<String, f64>,
}

impl SuiteReport {
    pub fn pass_count(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn fail_count(&self) -> usize {
        self.records.len() - self.pass_count()
    }

    pub fn all_pass(&self) -> bool {
        self.fail_count() == 0
    }
}

fn rel_tol_for(ctx: &ToleranceContext, magnitude: f64) -> f64 {
    ctx.abs_floor.max(ctx.rel_tol * magnitude.abs())
}

/// Runs the selected property groups on one cusp triple.
pub fn run_suite(
    cusps: [f64; 3],
    selection: &Selection,
    opts: &SuiteOptions,
) -> Result<SuiteReport, Error> {
    let [x1, x2, x3] = cusps;
    let pb = Parbelos::from_cusps(x1, x2, x3)?;
    let ar = Arbelos::from_cusps(x1, x2, x3)?;
    let ctx = ToleranceContext::new(opts.rel_tol, 1e-12, pb.width())?;

    let mut records = Vec::new();
    for n in selection.property_numbers() {
        match n {
            1 => property1(&pb, &ctx, &mut records),
            2 => property2(&pb, &ctx, &mut records),
            3 => property3(&pb, &ctx, &mut records),
            4 => property4(&pb, &ctx, &mut records),
            5 => records.extend(pb.diagonal_tangency(&ctx).records),
            6 => property6(&pb, &ctx, opts, &mut records),
            7 => records.extend(locus_equivalence(&ar, &pb, &ctx)?),
            _ => unreachable!("selection is validated to 1..=7"),
        }
    }
    if selection.include_auxiliary() {
        records.extend(pb.cusp_tangency_report(&ctx));
        arbelos_facts(&ar, &pb, &ctx, &mut records)?;
        common_tangent_group(&pb, &ctx, &mut records)?;
    }

    Ok(SuiteReport {
        cusps,
        records,
        derived: derived_quantities(&pb, &ar, &ctx)?,
    })
}

/// Batch run; data-parallel when the `parallel` feature is on.
pub fn run_suite_batch(
    triples: &[[f64; 3]],
    selection: &Selection,
    opts: &SuiteOptions,
) -> Result<Vec<SuiteReport>, Error> {
    batch::map_batch(triples, |t| run_suite(*t, selection, opts))
        .into_iter()
        .collect()
}

/// Always-sequential batch run, for comparison against [`run_suite_batch`].
pub fn run_suite_batch_seq(
    triples: &[[f64; 3]],
    selection: &Selection,
    opts: &SuiteOptions,
) -> Result<Vec<SuiteReport>, Error> {
    batch::map_batch_seq(triples, |t| run_suite(*t, selection, opts))
        .into_iter()
        .collect()
}

/// Seeded cusp triples: coordinates uniform in [-5, 5), sorted, rejecting
/// spans degenerate relative to the outer width.
pub fn sample_cusp_triples(seed: u64, count: usize) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut xs = [
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        ];
        xs.sort_by(f64::total_cmp);
        let span = xs[2] - xs[0];
        if span < 1e-2 {
            continue;
        }
        if xs[1] - xs[0] < 1e-3 * span || xs[2] - xs[1] < 1e-3 * span {
            continue;
        }
        out.push(xs);
    }
    out
}

fn property1(pb: &Parbelos, ctx: &ToleranceContext, records: &mut Vec<VerificationRecord>) {
    let (upper, lower_sum) = pb.boundary_lengths();
    records.push(VerificationRecord::compare(
        "property1_boundary_lengths_equal",
        upper,
        lower_sum,
        ctx.tol_at(upper),
    ));
}

fn property2(pb: &Parbelos, ctx: &ToleranceContext, records: &mut Vec<VerificationRecord>) {
    let (left, right) = pb.subdivide_similar();
    let middle_left = left.lower_right().latus_arc_length();
    let middle_right = right.lower_left().latus_arc_length();
    records.push(VerificationRecord::compare(
        "property2_middle_arcs_congruent",
        middle_left,
        middle_right,
        rel_tol_for(ctx, middle_left),
    ));

    let original_left = pb.lower_left().latus_arc_length();
    let original_right = pb.lower_right().latus_arc_length();
    let half_harmonic = original_left * original_right / (original_left + original_right);
    records.push(VerificationRecord::compare(
        "property2_half_harmonic_mean",
        middle_left,
        half_harmonic,
        rel_tol_for(ctx, half_harmonic),
    ));

    let ratio = pb.division_ratio();
    let ratio_dev = (left.division_ratio() - ratio)
        .abs()
        .max((right.division_ratio() - ratio).abs());
    records.push(VerificationRecord::residual(
        "property2_subdivisions_similar",
        ratio_dev,
        ctx.abs_floor.max(ctx.rel_tol),
    ));
}

fn property3(pb: &Parbelos, ctx: &ToleranceContext, records: &mut Vec<VerificationRecord>) {
    let quad = pb.cusp_vertices_parallelogram();
    records.push(VerificationRecord::residual(
        "property3_is_parallelogram",
        quad.parallelogram_mismatch(),
        ctx.length_tol(),
    ));

    // Proof facts: cusps and vertices line up at slope +/- 1/2.
    let [c1, c2, c3] = pb.cusps();
    let [_, v1, v2, v3] = quad.vertices();
    let slope = |p: Point, q: Point| (q.y - p.y) / (q.x - p.x);
    let slope_dev = [
        slope(c1, v1) - 0.5,
        slope(c1, v2) - 0.5,
        slope(c2, v3) - 0.5,
        slope(c3, v3) + 0.5,
        slope(c3, v2) + 0.5,
        slope(c2, v1) + 0.5,
    ]
    .iter()
    .fold(0.0f64, |acc, d| acc.max(d.abs()));
    records.push(VerificationRecord::residual(
        "property3_cusp_vertex_lines_slope_half",
        slope_dev,
        ctx.abs_floor.max(ctx.rel_tol),
    ));

    let ratio = pb.parbelos_area() / euclid::shoelace_area(&quad);
    records.push(VerificationRecord::compare(
        "property3_area_ratio_four_thirds",
        ratio,
        4.0 / 3.0,
        rel_tol_for(ctx, 4.0 / 3.0),
    ));
}

fn property4(pb: &Parbelos, ctx: &ToleranceContext, records: &mut Vec<VerificationRecord>) {
    let rect = pb.tangent_rectangle();
    let corner_as_length = rect.corner_dot().abs() / rect.max_edge();
    records.push(VerificationRecord::residual(
        "property4_is_rectangle",
        rect.parallelogram_mismatch().max(corner_as_length),
        ctx.length_tol(),
    ));

    let ratio = pb.parbelos_area() / euclid::shoelace_area(&rect);
    records.push(VerificationRecord::compare(
        "property4_area_ratio_two_thirds",
        ratio,
        2.0 / 3.0,
        rel_tol_for(ctx, 2.0 / 3.0),
    ));

    // Each tangent triangle doubles the matching vertex triangle.
    let [c1, c2, c3] = pb.cusps();
    let quad = pb.cusp_vertices_parallelogram().vertices();
    let rv = rect.vertices();
    let tri = |apex: Point, left: Point, right: Point| {
        0.5 * ((apex - left).cross(right - left)).abs()
    };
    let doubling_dev = [
        tri(rv[2], c1, c3) / tri(quad[2], c1, c3) - 2.0,
        tri(rv[1], c1, c2) / tri(quad[1], c1, c2) - 2.0,
        tri(rv[3], c2, c3) / tri(quad[3], c2, c3) - 2.0,
    ]
    .iter()
    .fold(0.0f64, |acc, d| acc.max(d.abs()));
    records.push(VerificationRecord::residual(
        "property4_tangent_triangles_double_vertex_triangles",
        doubling_dev,
        rel_tol_for(ctx, 2.0),
    ));
}

fn property6(
    pb: &Parbelos,
    ctx: &ToleranceContext,
    opts: &SuiteOptions,
    records: &mut Vec<VerificationRecord>,
) {
    let (circle, focus_record) = pb.rectangle_circumcircle(ctx);

    // Center sits at the diagonal midpoint (a+b, a) in normalized
    // coordinates; checked to the absolute floor. Measured in normalized
    // coordinates throughout, so a far-translated figure does not feed
    // translation ulps into the residual.
    let a = pb.upper().focal_length();
    let b = pb.lower_left().focal_parameter();
    let center_dev = distance(
        pb.rectangle_circumcenter_normalized(),
        Point::new(a + b, a),
    );
    records.push(VerificationRecord::residual(
        "property6_circumcenter_at_diagonal_midpoint",
        center_dev,
        ctx.abs_floor,
    ));

    let vertex_dev = pb
        .tangent_rectangle()
        .vertices()
        .iter()
        .map(|v| (distance(*v, circle.center) - circle.radius).abs())
        .fold(0.0, f64::max);
    records.push(VerificationRecord::residual(
        "property6_rectangle_vertices_on_circumcircle",
        vertex_dev,
        ctx.tol_at(circle.radius),
    ));

    records.push(focus_record);

    records.push(
        lambert_trials_on(pb.upper(), opts.seed, opts.lambert_trials, ctx)
            .renamed("property6_lambert_random_tangent_triangles"),
    );
}

fn arbelos_facts(
    ar: &Arbelos,
    pb: &Parbelos,
    ctx: &ToleranceContext,
    records: &mut Vec<VerificationRecord>,
) -> Result<(), Error> {
    records.extend(ar.pairwise_tangency(ctx));

    let rect = ar.cusp_midpoints_rectangle();
    let ratio = ar.arbelos_area() / euclid::shoelace_area(&rect);
    records.push(VerificationRecord::compare(
        "arbelos_area_ratio_pi_over_two",
        ratio,
        0.5 * std::f64::consts::PI,
        // The ratio is dimensionless; its accuracy does not grow with the
        // figure, so the tolerance must not either.
        ctx.abs_floor.max(1e-12 * ratio),
    ));

    let vertex_dev = rect
        .vertices()
        .iter()
        .zip(pb.tangent_rectangle().vertices().iter())
        .map(|(m, t)| distance(*m, *t))
        .fold(0.0, f64::max);
    records.push(VerificationRecord::residual(
        "arbelos_rectangle_coincides_with_tangent_rectangle",
        vertex_dev,
        ctx.machine_tol(0.0),
    ));

    // Independent route to the circumcircle: solve from three rectangle
    // corners rather than from the diagonal midpoint.
    let v = rect.vertices();
    let circle = euclid::circumcircle(v[0], v[1], v[2], ctx)?;
    records.push(
        VerificationRecord::compare(
            "arbelos_circumcircle_through_upper_center",
            distance(circle.center, ar.upper().center),
            circle.radius,
            ctx.machine_tol(circle.radius),
        )
        .with_witness("upper_center", ar.upper().center)
        .with_witness("circumcenter", circle.center),
    );
    Ok(())
}

fn common_tangent_group(
    pb: &Parbelos,
    ctx: &ToleranceContext,
    records: &mut Vec<VerificationRecord>,
) -> Result<(), Error> {
    let (disc_left, disc_right) = pb.common_tangent_discriminants()?;
    let disc_tol = 0.1 * ctx.rel_tol * ctx.scale * ctx.scale;
    records.push(VerificationRecord::residual(
        "common_tangent_double_contact_left",
        disc_left.abs(),
        disc_tol,
    ));
    records.push(VerificationRecord::residual(
        "common_tangent_double_contact_right",
        disc_right.abs(),
        disc_tol,
    ));
    records.extend(pb.lower_tangent_triangles(ctx)?.records);
    Ok(())
}

fn derived_quantities(
    pb: &Parbelos,
    ar: &Arbelos,
    ctx: &ToleranceContext,
) -> Result<BTreeMap<String, f64>, Error> {
    let (upper_arc, lower_sum) = pb.boundary_lengths();
    let (circle, _) = pb.rectangle_circumcircle(ctx);
    let tangent = pb.common_lower_tangent()?;
    let mut derived = BTreeMap::new();
    derived.insert("arbelos_area".to_string(), ar.arbelos_area());
    derived.insert("circumradius".to_string(), circle.radius);
    derived.insert("common_tangent_slope".to_string(), tangent.slope);
    derived.insert("lower_arc_length_sum".to_string(), lower_sum);
    derived.insert(
        "parallelogram_area".to_string(),
        euclid::shoelace_area(&pb.cusp_vertices_parallelogram()),
    );
    derived.insert("parbelos_area".to_string(), pb.parbelos_area());
    derived.insert(
        "tangent_rectangle_area".to_string(),
        euclid::shoelace_area(&pb.tangent_rectangle()),
    );
    derived.insert("upper_arc_length".to_string(), upper_arc);
    Ok(derived)
}

/// Worst Lambert record over seeded random tangent triples on one parabola.
///
/// Abscissae are drawn from the latus rectum span with pairwise separation
/// of at least 1e-3 of the span.
pub fn lambert_trials_on(
    parabola: &VerticalParabola,
    seed: u64,
    trials: usize,
    ctx: &ToleranceContext,
) -> VerificationRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: Option<VerificationRecord> = None;
    for _ in 0..trials.max(1) {
        let xs = sample_separated_abscissae(&mut rng, parabola);
        let record = parabola
            .lambert_check(
                &parabola.tangent_at(xs[0]),
                &parabola.tangent_at(xs[1]),
                &parabola.tangent_at(xs[2]),
                ctx,
            )
            .expect("sampled tangent triples are well separated");
        let is_worse = match &worst {
            Some(w) => {
                record.residual / record.tolerance_used > w.residual / w.tolerance_used
            }
            None => true,
        };
        if is_worse {
            worst = Some(record);
        }
    }
    worst.expect("at least one trial runs")
}

fn sample_separated_abscissae(rng: &mut ChaCha8Rng, parabola: &VerticalParabola) -> [f64; 3] {
    let lo = parabola.latus_left().x;
    let hi = parabola.latus_right().x;
    let min_gap = 1e-3 * (hi - lo);
    loop {
        let mut xs = [
            rng.random_range(lo..hi),
            rng.random_range(lo..hi),
            rng.random_range(lo..hi),
        ];
        xs.sort_by(f64::total_cmp);
        if xs[1] - xs[0] >= min_gap && xs[2] - xs[1] >= min_gap {
            return xs;
        }
    }
}

/// Max focus-on-circumcircle residual, normalized by the figure scale, over
/// seeded random tangent triangles on random parabolas. Trials run in the
/// batch pool; each derives its own generator so the result is independent
/// of scheduling.
pub fn lambert_random_trials(seed: u64, trials: usize) -> f64 {
    let indices: Vec<u64> = (0..trials as u64).collect();
    let normalized = batch::map_batch(&indices, |i| {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let y0 = rng.random_range(-5.0..5.0);
        let left = rng.random_range(-5.0..5.0);
        let width = rng.random_range(0.5..8.0);
        let ctx = ToleranceContext::for_scale(width);
        let parabola = VerticalParabola::from_latus_rectum(
            Point::new(left, y0),
            Point::new(left + width, y0),
            &ctx,
        )
        .expect("sampled latus rectum is horizontal and wide");
        let record = lambert_trials_on(&parabola, rng.random(), 1, &ctx);
        record.residual / ctx.scale
    });
    normalized.into_iter().fold(0.0, f64::max)
}
