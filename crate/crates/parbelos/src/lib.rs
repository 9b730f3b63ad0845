//! Geometry of the parbelos, the parabolic analog of the arbelos.
//!
//! A parbelos is the region bounded by the latus rectum arcs of three
//! downward-opening parabolas erected over three collinear cusps. This crate
//! constructs parbeloses and their companion arbeloses, computes the derived
//! quantities (arc lengths, areas, tangent lines, circumcircles, inscribed
//! circle loci), and verifies the classical identities relating them as
//! numerical records with explicit tolerances.
//!
//! Module map:
//! - [`numeric`]: scale-aware tolerances, a stable quadratic solver, and an
//!   adaptive-quadrature arc-length oracle.
//! - [`euclid`]: points, lines, circles, quadrilaterals, and incidence
//!   predicates.
//! - [`parabola`]: vertical-axis parabolas with tangents, arc lengths, and
//!   parabolic segment areas.
//! - [`parbelos`]: the parbelos construction and its verified properties.
//! - [`arbelos`]: the companion arbelos and the inscribed-circle locus.
//! - [`figures`]: deterministic SVG scenes for the constructions.
//! - [`verify`]: the verification suite, with batch entry points that run
//!   data-parallel under the `parallel` feature (default) and sequentially
//!   without it.

pub mod arbelos;
pub mod batch;
pub mod euclid;
pub mod figures;
pub mod numeric;
pub mod parabola;
pub mod parbelos;
pub mod report;
pub mod verify;

pub use arbelos::{Arbelos, InscribedCircleFamily, Semicircle};
pub use euclid::{Circle, Line, Point, Quadrilateral, Vec2};
pub use figures::{FigureKind, Scene};
pub use numeric::{QuadraticRoots, ToleranceContext};
pub use parabola::{LatusArc, VerticalParabola};
pub use parbelos::Parbelos;
pub use report::VerificationRecord;
pub use verify::{Selection, SuiteOptions, SuiteReport};

use thiserror::Error;

/// Umbrella error for operations that cross module boundaries.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] numeric::NumericError),
    #[error(transparent)]
    Euclid(#[from] euclid::EuclidError),
    #[error(transparent)]
    Parabola(#[from] parabola::ParabolaError),
    #[error(transparent)]
    Parbelos(#[from] parbelos::ParbelosError),
    #[error(transparent)]
    Arbelos(#[from] arbelos::ArbelosError),
    #[error(transparent)]
    Figure(#[from] figures::FigureError),
}

pub type Result<T> = std::result::Result<T, Error>;
