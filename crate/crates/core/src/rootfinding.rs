//! Safeguarded Newton iteration for the unique positive root of a footpoint
//! polynomial inside a sign-changing bracket.

use thiserror::Error;

use crate::ellipsoid::{CartesianPoint, TriaxialEllipsoid};
use crate::polynomials::{PolyCoeffs, PolyKind};

pub const MAX_ITERATIONS: usize = 200;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("no sign change on [{lo}, {hi}]: p(lo) = {f_lo:e}, p(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("no convergence after {iterations} iterations (last bracket [{lo}, {hi}])")]
    NoConvergence { iterations: usize, lo: f64, hi: f64 },
    #[error("no default bracket for {0:?} polynomials")]
    UnsupportedKind(PolyKind),
}

/// Finite interval `lo < hi` expected to contain a sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self, RootError> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(RootError::InvalidBracket { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Bracket of the positive root for the polynomial kinds that are solved.
///
/// * `A`: `[0, √((a_x X)² + (a_y Y)² + (a_z Z)²) − a_z²]`, since at the root
///   `(t + a_z²)² ≤ Σ (a_i c_i)²`. Valid for outside points only.
/// * `Abar`: `(0, a_z²)`, `DeltaBar`: `(0, a_y²)`.
/// * `B`: `(0, a_z]`, `G1`: `(0, a_y]`.
///
/// `p` must already be reduced to the first octant.
pub fn default_bracket(kind: PolyKind, e: &TriaxialEllipsoid, p: CartesianPoint) -> Result<Bracket, RootError> {
    match kind {
        PolyKind::A => {
            let reach = (e.ax() * p.x).hypot(e.ay() * p.y).hypot(e.az() * p.z);
            Bracket::new(0.0, reach - e.az2())
        }
        PolyKind::Abar => Bracket::new(0.0, e.az2()),
        PolyKind::DeltaBar => Bracket::new(0.0, e.ay2()),
        PolyKind::B => Bracket::new(0.0, e.az()),
        PolyKind::G1 => Bracket::new(0.0, e.ay()),
        PolyKind::Delta | PolyKind::AlphaBiaxial => Err(RootError::UnsupportedKind(kind)),
    }
}

/// `[0, √(a_x²(X² + Y²) + a_z² Z²) − a_z²]`, the biaxial analogue of the
/// `A` bracket, for points outside the ellipsoid.
pub fn alpha_bracket(ax: f64, az: f64, p: CartesianPoint) -> Result<Bracket, RootError> {
    let reach = (ax * p.x).hypot(ax * p.y).hypot(az * p.z);
    Bracket::new(0.0, reach - az * az)
}

/// Root of `poly` inside `bracket`.
///
/// Newton steps start from the upper end and fall back to bisection when a
/// step leaves the current bracket or fails to halve the previous step.
/// Stops once the Newton correction is within two ULPs of the iterate or
/// the bracket has shrunk to four ULPs.
pub fn unique_positive_root(poly: &PolyCoeffs, bracket: Bracket) -> Result<f64, RootError> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let f_lo = poly.eval(lo);
    let f_hi = poly.eval(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if (f_lo < 0.0) == (f_hi < 0.0) || f_lo.is_nan() || f_hi.is_nan() {
        return Err(RootError::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let increasing = f_lo < 0.0;

    let mut x = hi;
    let (mut fx, mut dfx) = (f_hi, poly.eval_with_derivative(hi).1);
    let mut prev_step = hi - lo;
    let mut step = prev_step;

    for _ in 0..MAX_ITERATIONS {
        let newton = x - fx / dfx;
        let newton_ok = newton.is_finite() && newton > lo && newton < hi && (2.0 * (fx / dfx)).abs() <= prev_step.abs();
        prev_step = step;
        let next = if newton_ok {
            step = x - newton;
            newton
        } else {
            step = 0.5 * (hi - lo);
            lo + step
        };
        if newton_ok && step.abs() <= 2.0 * f64::EPSILON * next.abs() {
            return Ok(next);
        }
        x = next;
        (fx, dfx) = poly.eval_with_derivative(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == increasing {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * x.abs() {
            return Ok(x);
        }
    }
    Err(RootError::NoConvergence { iterations: MAX_ITERATIONS, lo, hi })
}
