//! Command-line interface: verify the parbelos identities for a cusp
//! triple (JSON report), render figures (SVG), and sweep derived quantities
//! over the cusp ratio (CSV).
//!
//! Exit codes: 0 success, 1 at least one failed property check, 2 invalid
//! arguments, 3 unwritable output path.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use parbelos::batch;
use parbelos::figures::{self, FigureKind};
use parbelos::verify::{run_suite, Selection, SuiteOptions};
use parbelos::Parbelos;
use report::{format_real, ReportDocument};

#[derive(Parser)]
#[command(
    name = "parbelos",
    version,
    about = "Construct parbelos figures from cusp coordinates, verify their identities, and render them as SVG"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run property checks and print a JSON report to standard output.
    Verify {
        /// Cusp abscissae, strictly increasing.
        #[arg(long, num_args = 3, value_names = ["X1", "X2", "X3"], allow_negative_numbers = true, required = true)]
        cusps: Vec<f64>,
        /// Property numbers to check ("all" or e.g. "1,3,5").
        #[arg(long, default_value = "all")]
        properties: String,
        /// Relative tolerance for the checks (default 1e-9).
        #[arg(long = "rel-tol")]
        rel_tol: Option<f64>,
        /// Seed for the randomized Lambert tangent trials.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render one named figure as an SVG file.
    Render {
        /// Figure name (e.g. parbelos, tangent-rectangle, locus).
        figure: String,
        #[arg(long, num_args = 3, value_names = ["X1", "X2", "X3"], allow_negative_numbers = true, required = true)]
        cusps: Vec<f64>,
        /// Output path; defaults to `figure-<name>.svg`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a CSV of derived quantities over a grid of cusp ratios.
    ///
    /// Each ratio r in (0,1) places the middle cusp of the normalized
    /// parbelos with cusps (0, 4r, 4).
    Sweep {
        /// Explicit ratios, each strictly inside (0,1).
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        ratios: Vec<f64>,
        /// Evenly spaced interior grid of this many ratios (at least 2).
        #[arg(long, conflicts_with = "ratios")]
        grid: Option<usize>,
        /// Output CSV path.
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long = "rel-tol")]
        rel_tol: Option<f64>,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_ARGS: u8 = 2;
const EXIT_UNWRITABLE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            cusps,
            properties,
            rel_tol,
            seed,
        } => cmd_verify(&cusps, &properties, rel_tol, seed),
        Command::Render {
            figure,
            cusps,
            output,
        } => cmd_render(&figure, &cusps, output.as_deref()),
        Command::Sweep {
            ratios,
            grid,
            output,
            rel_tol,
        } => cmd_sweep(&ratios, grid, &output, rel_tol),
    };
    ExitCode::from(code)
}

fn fail(message: impl std::fmt::Display, code: u8) -> u8 {
    eprintln!("error: {message}");
    code
}

fn cusp_triple(values: &[f64]) -> Result<[f64; 3], String> {
    if values.len() != 3 {
        return Err("expected exactly three cusp abscissae".to_string());
    }
    let [x1, x2, x3] = [values[0], values[1], values[2]];
    if !(x1.is_finite() && x2.is_finite() && x3.is_finite()) {
        return Err("cusp abscissae must be finite".to_string());
    }
    if !(x1 < x2 && x2 < x3) {
        return Err(format!("cusps must be strictly increasing, got {x1} {x2} {x3}"));
    }
    Ok([x1, x2, x3])
}

fn validated_rel_tol(rel_tol: Option<f64>) -> Result<f64, String> {
    let value = rel_tol.unwrap_or(1e-9);
    if !value.is_finite() || value <= 0.0 {
        return Err(format!("relative tolerance must be positive, got {value}"));
    }
    Ok(value)
}

fn cmd_verify(cusps: &[f64], properties: &str, rel_tol: Option<f64>, seed: u64) -> u8 {
    let cusps = match cusp_triple(cusps) {
        Ok(c) => c,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let selection: Selection = match properties.parse() {
        Ok(s) => s,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let rel_tol = match validated_rel_tol(rel_tol) {
        Ok(v) => v,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let opts = SuiteOptions {
        rel_tol,
        seed,
        ..SuiteOptions::default()
    };
    let suite = match run_suite(cusps, &selection, &opts) {
        Ok(s) => s,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    print!("{}", ReportDocument::from_suite(&suite).to_json());
    exit_code_for_suite(&suite)
}

fn exit_code_for_suite(suite: &parbelos::verify::SuiteReport) -> u8 {
    if suite.all_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_render(figure_name: &str, cusps: &[f64], output: Option<&Path>) -> u8 {
    let kind: FigureKind = match figure_name.parse() {
        Ok(k) => k,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let [x1, x2, x3] = match cusp_triple(cusps) {
        Ok(c) => c,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let svg = match figures::figure(kind, x1, x2, x3).and_then(|scene| Ok(scene.render()?)) {
        Ok(s) => s,
        Err(e) => return fail(e, EXIT_INVALID_ARGS),
    };
    let default_path = PathBuf::from(format!("figure-{}.svg", kind.name()));
    let path = output.unwrap_or(&default_path);
    if let Err(e) = std::fs::write(path, svg) {
        return fail(
            format!("cannot write {}: {e}", path.display()),
            EXIT_UNWRITABLE,
        );
    }
    println!("{}", path.display());
    0
}

struct SweepRow {
    ratio: f64,
    parbelos_area: f64,
    rectangle_area: f64,
    parallelogram_area: f64,
    upper_arc: f64,
    lower_arc_sum: f64,
    circumradius: f64,
    common_tangent_slope: f64,
}

const SWEEP_HEADER: &str = "ratio,parbelos_area,rectangle_area,parallelogram_area,upper_arc,lower_arc_sum,circumradius,common_tangent_slope";

fn sweep_row(ratio: f64) -> Result<SweepRow, parbelos::Error> {
    let pb = Parbelos::from_cusps(0.0, 4.0 * ratio, 4.0)?;
    let ctx = pb.tolerance();
    let (upper_arc, lower_arc_sum) = pb.boundary_lengths();
    let (circle, _) = pb.rectangle_circumcircle(&ctx);
    let tangent = pb.common_lower_tangent()?;
    Ok(SweepRow {
        ratio,
        parbelos_area: pb.parbelos_area(),
        rectangle_area: parbelos::euclid::shoelace_area(&pb.tangent_rectangle()),
        parallelogram_area: parbelos::euclid::shoelace_area(&pb.cusp_vertices_parallelogram()),
        upper_arc,
        lower_arc_sum,
        circumradius: circle.radius,
        common_tangent_slope: tangent.slope,
    })
}

fn cmd_sweep(ratios: &[f64], grid: Option<usize>, output: &Path, rel_tol: Option<f64>) -> u8 {
    if let Err(e) = validated_rel_tol(rel_tol) {
        return fail(e, EXIT_INVALID_ARGS);
    }
    let ratios: Vec<f64> = if let Some(n) = grid {
        if n < 2 {
            return fail("grid must contain at least 2 ratios", EXIT_INVALID_ARGS);
        }
        (1..=n).map(|i| i as f64 / (n + 1) as f64).collect()
    } else {
        ratios.to_vec()
    };
    if ratios.is_empty() {
        return fail(
            "empty ratio grid: pass --ratios or --grid",
            EXIT_INVALID_ARGS,
        );
    }
    for r in &ratios {
        if !r.is_finite() || *r <= 0.0 || *r >= 1.0 {
            return fail(
                format!("ratio must lie strictly inside (0,1), got {r}"),
                EXIT_INVALID_ARGS,
            );
        }
    }

    // Per-ratio fanout; results merged back in input order.
    let rows = batch::map_batch(&ratios, |r| sweep_row(*r));
    let mut csv = String::from(SWEEP_HEADER);
    csv.push('\n');
    for row in rows {
        let row = match row {
            Ok(r) => r,
            Err(e) => return fail(e, EXIT_INVALID_ARGS),
        };
        let cells = [
            row.ratio,
            row.parbelos_area,
            row.rectangle_area,
            row.parallelogram_area,
            row.upper_arc,
            row.lower_arc_sum,
            row.circumradius,
            row.common_tangent_slope,
        ]
        .map(format_real);
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }
    if let Err(e) = std::fs::write(output, csv) {
        return fail(
            format!("cannot write {}: {e}", output.display()),
            EXIT_UNWRITABLE,
        );
    }
    println!("{}", output.display());
    0
}
