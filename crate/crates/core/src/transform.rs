//! Cartesian → geodetic conversion.
//!
//! Both algorithms solve in the closed first octant and restore signs
//! afterwards; the ellipsoid is symmetric under each coordinate reflection.
//!
//! * [`cartesian_to_geodetic_i`] works with the normal-line parameter `t`
//!   (`A(t)` outside, `Ā(k)` or `Δ̄(k)` inside).
//! * [`cartesian_to_geodetic_ii`] solves directly for the footpoint's `z`
//!   coordinate with `B(z)` (or for `y` with `G₁(y)` in the equatorial plane).

use std::fmt;

use thiserror::Error;

use crate::ellipsoid::{CartesianPoint, GeodeticCoord, Longitude, TriaxialEllipsoid, SURFACE_TOLERANCE};
use crate::polynomials::{build_a, build_abar, build_b, build_delta_bar, build_g1, PolyKind};
use crate::rootfinding::{default_bracket, unique_positive_root, RootError};

/// Coordinates within this fraction of `max(a_x, |p|)` count as zero when
/// choosing a branch.
pub const AXIS_TOLERANCE: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("the origin has no geodetic coordinates")]
    Origin,
    #[error("point {0} has non-finite coordinates")]
    NonFinite(CartesianPoint),
    #[error("solving {kind:?} for {point}: {source}")]
    Root {
        kind: PolyKind,
        point: CartesianPoint,
        #[source]
        source: RootError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Normal-line parameter `t` via `A`, `Ā`, `Δ̄`.
    I,
    /// Footpoint `z` via `B`, then `G₁` in the equatorial plane.
    II,
}

impl Algorithm {
    pub const BOTH: [Algorithm; 2] = [Algorithm::I, Algorithm::II];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::I => "I",
            Algorithm::II => "II",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Which side of the reference surface a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    On,
    Outside,
}

impl Side {
    pub fn of(e: &TriaxialEllipsoid, p: CartesianPoint) -> Side {
        let f = e.residual(p);
        if f.abs() <= SURFACE_TOLERANCE {
            Side::On
        } else if f > 0.0 {
            Side::Outside
        } else {
            Side::Inside
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FootpointResult {
    /// Surface point whose normal passes through the input point.
    pub footpoint: CartesianPoint,
    /// `t` for algorithm I, `Z_E` (or `Y_E` in the equatorial plane) for II.
    pub parameter: f64,
    pub side: Side,
    /// Signed distance to the footpoint, negative inside.
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisSign {
    Plus,
    Minus,
}

impl AxisSign {
    fn of(v: f64) -> Self {
        if v < 0.0 {
            AxisSign::Minus
        } else {
            AxisSign::Plus
        }
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            AxisSign::Plus => v,
            AxisSign::Minus => -v,
        }
    }
}

/// Signs stripped from a point by [`octant_reduce`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctantSigns {
    pub x: AxisSign,
    pub y: AxisSign,
    pub z: AxisSign,
}

impl OctantSigns {
    /// Map a first-octant point back into the original octant.
    pub fn restore(&self, p: CartesianPoint) -> CartesianPoint {
        CartesianPoint::new(self.x.apply(p.x), self.y.apply(p.y), self.z.apply(p.z))
    }
}

pub fn octant_reduce(p: CartesianPoint) -> (CartesianPoint, OctantSigns) {
    let signs = OctantSigns { x: AxisSign::of(p.x), y: AxisSign::of(p.y), z: AxisSign::of(p.z) };
    (CartesianPoint::new(p.x.abs(), p.y.abs(), p.z.abs()), signs)
}

fn check_input(p: CartesianPoint) -> Result<(), TransformError> {
    if !p.is_finite() {
        return Err(TransformError::NonFinite(p));
    }
    if p.is_origin() {
        return Err(TransformError::Origin);
    }
    Ok(())
}

/// First-octant copy of `p` with near-zero coordinates snapped to zero.
fn reduce_for_branching(e: &TriaxialEllipsoid, p: CartesianPoint) -> (CartesianPoint, OctantSigns) {
    let (r, signs) = octant_reduce(p);
    let band = AXIS_TOLERANCE * e.ax().max(p.norm());
    let snap = |v: f64| if v <= band { 0.0 } else { v };
    (CartesianPoint::new(snap(r.x), snap(r.y), snap(r.z)), signs)
}

fn solve(
    kind: PolyKind,
    e: &TriaxialEllipsoid,
    reduced: CartesianPoint,
    poly: crate::polynomials::PolyCoeffs,
) -> Result<f64, TransformError> {
    let wrap = |source| TransformError::Root { kind, point: reduced, source };
    let bracket = default_bracket(kind, e, reduced).map_err(wrap)?;
    unique_positive_root(&poly, bracket).map_err(wrap)
}

fn finish(
    e: &TriaxialEllipsoid,
    p: CartesianPoint,
    signs: OctantSigns,
    reduced_fp: CartesianPoint,
    parameter: f64,
    side: Side,
) -> (GeodeticCoord, FootpointResult) {
    let footpoint = signs.restore(reduced_fp);
    let distance = p.distance(footpoint);
    let h = match side {
        Side::Outside => distance,
        Side::On => 0.0,
        Side::Inside => -distance,
    };
    let (phi, lambda) = e.surface_angles(footpoint);
    (GeodeticCoord { phi, lambda, h }, FootpointResult { footpoint, parameter, side, h })
}

/// Geodetic coordinates through the normal-line parameter `t`.
///
/// * on the surface: the point is its own footpoint and `h = 0`;
/// * outside: `t > 0` is the positive root of `A(t)`;
/// * inside with `Z ≠ 0`: `t = k − a_z²` with `k` the positive root of `Ā(k)`;
/// * inside with `Z = 0`, `X, Y ≠ 0`: `t = k − a_y²` from `Δ̄(k)`;
/// * inside on the `y` or `x` axis: the footpoint is the axis vertex.
///
/// The footpoint is `(a_x² X/(t + a_x²), a_y² Y/(t + a_y²), a_z² Z/(t + a_z²))`.
pub fn cartesian_to_geodetic_i(
    e: &TriaxialEllipsoid,
    p: CartesianPoint,
) -> Result<(GeodeticCoord, FootpointResult), TransformError> {
    check_input(p)?;
    let (r, signs) = reduce_for_branching(e, p);
    let side = Side::of(e, p);
    let along_normal = |t: f64| {
        CartesianPoint::new(e.ax2() * r.x / (t + e.ax2()), e.ay2() * r.y / (t + e.ay2()), e.az2() * r.z / (t + e.az2()))
    };

    let (fp, t) = match side {
        Side::On => (r, 0.0),
        Side::Outside => {
            let t = solve(PolyKind::A, e, r, build_a(e, r))?;
            (along_normal(t), t)
        }
        Side::Inside if r.z > 0.0 => {
            let k = solve(PolyKind::Abar, e, r, build_abar(e, r))?;
            let t = k - e.az2();
            (along_normal(t), t)
        }
        Side::Inside if r.x > 0.0 && r.y > 0.0 => {
            let k = solve(PolyKind::DeltaBar, e, r, build_delta_bar(e, r))?;
            let t = k - e.ay2();
            (CartesianPoint::new(e.ax2() * r.x / (k + e.r()), e.ay2() * r.y / k, 0.0), t)
        }
        Side::Inside if r.x == 0.0 => {
            let t = (r.y - e.ay()) * e.ay();
            (CartesianPoint::new(0.0, e.ay(), 0.0), t)
        }
        Side::Inside => {
            let t = (r.x - e.ax()) * e.ax();
            (CartesianPoint::new(e.ax(), 0.0, 0.0), t)
        }
    };
    let reduced_fp = if side == Side::On { octant_reduce(p).0 } else { fp };
    Ok(finish(e, p, signs, reduced_fp, t, side))
}

/// Geodetic coordinates through the footpoint's `z` coordinate.
///
/// * `Z ≠ 0`: `Z_E` is the positive root of `B(z)`, then
///   `X_E = a_x² X Z_E/(P Z_E + a_z² Z)` and `Y_E = a_y² Y Z_E/(Q Z_E + a_z² Z)`;
/// * `Z = 0`, `Y ≠ 0`: `Y_E` is the positive root of `G₁(y)`, then
///   `X_E = a_x² X Y_E/(R Y_E + a_y² Y)`;
/// * `Z = Y = 0`: the footpoint is `(a_x, 0, 0)`.
///
/// The height is `±|p − footpoint|`, positive when `f(p) > 0`.
pub fn cartesian_to_geodetic_ii(
    e: &TriaxialEllipsoid,
    p: CartesianPoint,
) -> Result<(GeodeticCoord, FootpointResult), TransformError> {
    check_input(p)?;
    let (r, signs) = reduce_for_branching(e, p);
    let side = Side::of(e, p);

    let (fp, parameter) = if r.z > 0.0 {
        let ze = solve(PolyKind::B, e, r, build_b(e, r))?;
        let xe = e.ax2() * r.x * ze / (e.p() * ze + e.az2() * r.z);
        let ye = e.ay2() * r.y * ze / (e.q() * ze + e.az2() * r.z);
        (CartesianPoint::new(xe, ye, ze), ze)
    } else if r.y > 0.0 {
        let ye = solve(PolyKind::G1, e, r, build_g1(e, r))?;
        let xe = e.ax2() * r.x * ye / (e.r() * ye + e.ay2() * r.y);
        (CartesianPoint::new(xe, ye, 0.0), ye)
    } else {
        (CartesianPoint::new(e.ax(), 0.0, 0.0), 0.0)
    };
    Ok(finish(e, p, signs, fp, parameter, side))
}

pub fn cartesian_to_geodetic(
    algorithm: Algorithm,
    e: &TriaxialEllipsoid,
    p: CartesianPoint,
) -> Result<(GeodeticCoord, FootpointResult), TransformError> {
    match algorithm {
        Algorithm::I => cartesian_to_geodetic_i(e, p),
        Algorithm::II => cartesian_to_geodetic_ii(e, p),
    }
}

/// Longitude difference, zero when both are undefined.
pub fn longitude_difference(a: Longitude, b: Longitude) -> Option<f64> {
    match (a, b) {
        (Longitude::Defined(x), Longitude::Defined(y)) => {
            let d = (x - y).abs();
            Some(d.min(2.0 * std::f64::consts::PI - d))
        }
        (Longitude::Undefined, Longitude::Undefined) => Some(0.0),
        _ => None,
    }
}
