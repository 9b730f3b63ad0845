//! Scale-aware tolerances, a numerically stable quadratic solver, and an
//! adaptive Simpson arc-length oracle.
//!
//! The quadrature routine is the independent oracle used to certify the
//! closed-form arc lengths in [`crate::parabola`]; it shares no code with
//! them.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericError {
    #[error("non-finite operand")]
    NonFiniteOperand,
    #[error("degenerate quadratic")]
    DegenerateQuadratic,
    #[error("quadrature did not converge")]
    QuadratureDidNotConverge,
    #[error("invalid interval")]
    InvalidInterval,
    #[error("invalid tolerance context")]
    InvalidToleranceContext,
}

/// Comparison policy: a relative tolerance anchored to a characteristic
/// figure scale, with an absolute floor for values near zero.
///
/// The effective tolerance for comparing values of magnitude `m` is
/// `max(abs_floor, rel_tol * max(m, scale))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceContext {
    pub rel_tol: f64,
    pub abs_floor: f64,
    /// Characteristic length of the current figure (e.g. the outer latus
    /// rectum width), so that comparisons of near-zero residuals are still
    /// judged relative to the figure, not to the residual itself.
    pub scale: f64,
}

impl Default for ToleranceContext {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_floor: 1e-12,
            scale: 1.0,
        }
    }
}

impl ToleranceContext {
    pub fn new(rel_tol: f64, abs_floor: f64, scale: f64) -> Result<Self, NumericError> {
        if !(rel_tol.is_finite() && abs_floor.is_finite() && scale.is_finite()) {
            return Err(NumericError::NonFiniteOperand);
        }
        if rel_tol <= 0.0 || abs_floor <= 0.0 || scale <= 0.0 {
            return Err(NumericError::InvalidToleranceContext);
        }
        Ok(Self {
            rel_tol,
            abs_floor,
            scale,
        })
    }

    /// Default tolerances for a figure of the given characteristic length.
    pub fn for_scale(scale: f64) -> Self {
        debug_assert!(scale.is_finite() && scale > 0.0);
        Self {
            scale,
            ..Self::default()
        }
    }

    /// Effective tolerance for a comparison at the given magnitude.
    pub fn tol_at(&self, magnitude: f64) -> f64 {
        self.abs_floor
            .max(self.rel_tol * magnitude.abs().max(self.scale))
    }

    /// Tolerance for residuals measured in figure-length units:
    /// `max(abs_floor, rel_tol * scale)`.
    pub fn length_tol(&self) -> f64 {
        self.abs_floor.max(self.rel_tol * self.scale)
    }

    /// Fixed near-machine tolerance (1e-12 relative) for identities expected
    /// to hold to rounding error regardless of the configured `rel_tol`.
    pub fn machine_tol(&self, magnitude: f64) -> f64 {
        self.abs_floor.max(1e-12 * magnitude.abs().max(self.scale))
    }

    /// Scale-aware approximate equality. Errors on non-finite operands.
    pub fn approx_eq(&self, x: f64, y: f64) -> Result<bool, NumericError> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(NumericError::NonFiniteOperand);
        }
        let tol = self
            .abs_floor
            .max(self.rel_tol * x.abs().max(y.abs()).max(self.scale));
        Ok((x - y).abs() <= tol)
    }
}

/// Roots of a genuine quadratic, classified by discriminant sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QuadraticRoots {
    /// Two distinct real roots in ascending order.
    TwoReal(f64, f64),
    /// A repeated real root.
    Double(f64),
    /// A conjugate pair of non-real roots; no real root is reported.
    ComplexPair,
}

impl QuadraticRoots {
    pub fn real_roots(&self) -> Vec<f64> {
        match *self {
            QuadraticRoots::TwoReal(lo, hi) => vec![lo, hi],
            QuadraticRoots::Double(r) => vec![r, r],
            QuadraticRoots::ComplexPair => Vec::new(),
        }
    }
}

/// Solves `c2*x^2 + c1*x + c0 = 0` for `c2 != 0`.
///
/// The larger-magnitude root is computed first from the non-cancelling
/// branch of the formula; the other follows from the root product `c0/c2`.
pub fn solve_quadratic(c2: f64, c1: f64, c0: f64) -> Result<QuadraticRoots, NumericError> {
    if !(c2.is_finite() && c1.is_finite() && c0.is_finite()) {
        return Err(NumericError::NonFiniteOperand);
    }
    if c2 == 0.0 {
        return Err(NumericError::DegenerateQuadratic);
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        return Ok(QuadraticRoots::ComplexPair);
    }
    if disc == 0.0 {
        return Ok(QuadraticRoots::Double(-c1 / (2.0 * c2)));
    }
    let sign = if c1 >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (c1 + sign * disc.sqrt());
    // disc > 0 rules out q == 0: either c1 != 0 or sqrt(disc) != 0.
    let r1 = q / c2;
    let r2 = c0 / q;
    if r1 <= r2 {
        Ok(QuadraticRoots::TwoReal(r1, r2))
    } else {
        Ok(QuadraticRoots::TwoReal(r2, r1))
    }
}

const MAX_QUADRATURE_DEPTH: u32 = 48;
// Panels may not be accepted shallower than this. Coarse acceptances can be
// luckily accurate, which would let a tighter tolerance return a worse
// result; starting in the asymptotic regime keeps refinement monotone.
const MIN_QUADRATURE_DEPTH: u32 = 6;

/// Arc length `integral of sqrt(1 + f'(x)^2) dx` over `[x0, x1]` by adaptive
/// Simpson quadrature with Richardson extrapolation.
///
/// Deterministic for fixed inputs. The estimated error is kept at or below
/// `tol`; exceeding the subdivision bound reports
/// [`NumericError::QuadratureDidNotConverge`].
pub fn arc_length_quadrature<F>(f_deriv: F, x0: f64, x1: f64, tol: f64) -> Result<f64, NumericError>
where
    F: Fn(f64) -> f64,
{
    if !(x0.is_finite() && x1.is_finite() && tol.is_finite()) {
        return Err(NumericError::NonFiniteOperand);
    }
    if x0 >= x1 || tol <= 0.0 {
        return Err(NumericError::InvalidInterval);
    }
    let g = |x: f64| {
        let d = f_deriv(x);
        (1.0 + d * d).sqrt()
    };
    let mid = 0.5 * (x0 + x1);
    let (ga, gm, gb) = (g(x0), g(mid), g(x1));
    if !(ga.is_finite() && gm.is_finite() && gb.is_finite()) {
        return Err(NumericError::NonFiniteOperand);
    }
    let whole = (x1 - x0) / 6.0 * (ga + 4.0 * gm + gb);
    adaptive_step(&g, x0, x1, ga, gm, gb, whole, tol, MAX_QUADRATURE_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<G>(
    g: &G,
    a: f64,
    b: f64,
    ga: f64,
    gm: f64,
    gb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64, NumericError>
where
    G: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (glm, grm) = (g(lm), g(rm));
    if !(glm.is_finite() && grm.is_finite()) {
        return Err(NumericError::NonFiniteOperand);
    }
    let left = (m - a) / 6.0 * (ga + 4.0 * glm + gm);
    let right = (b - m) / 6.0 * (gm + 4.0 * grm + gb);
    let delta = left + right - whole;
    // Accept at eps rather than the textbook 15*eps: the Richardson term
    // then bounds the committed error by eps/15 per panel.
    if delta.abs() <= eps && depth <= MAX_QUADRATURE_DEPTH - MIN_QUADRATURE_DEPTH {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(NumericError::QuadratureDidNotConverge);
    }
    let half_eps = 0.5 * eps;
    let l = adaptive_step(g, a, m, ga, glm, gm, left, half_eps, depth - 1)?;
    let r = adaptive_step(g, m, b, gm, grm, gb, right, half_eps, depth - 1)?;
    Ok(l + r)
}
