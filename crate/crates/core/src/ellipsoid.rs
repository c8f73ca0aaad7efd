//! Triaxial reference ellipsoid, the forward geodetic → Cartesian transform,
//! and extraction of geodetic angles from a point on the surface.
//!
//! All lengths are kilometres and all angles radians.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use thiserror::Error;

/// Points with `|f(p)|` at or below this value are treated as lying on the
/// ellipsoid, where `f(p) = X²/a_x² + Y²/a_y² + Z²/a_z² − 1`.
pub const SURFACE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EllipsoidError {
    #[error("semiaxes must be finite and satisfy a_x > a_y > a_z > 0, got ({0}, {1}, {2})")]
    InvalidAxes(f64, f64, f64),
    #[error("invalid geodetic coordinate: {0}")]
    InvalidGeodetic(String),
    #[error("point is not on the ellipsoid surface (residual {residual:e})")]
    NotOnSurface { residual: f64 },
}

/// A triaxial ellipsoid `X²/a_x² + Y²/a_y² + Z²/a_z² = 1` with `a_x > a_y > a_z`.
///
/// Derived constants are computed once at construction. Squared differences
/// of semiaxes are formed as `(a − b)(a + b)` so that bodies with nearly equal
/// axes keep their relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriaxialEllipsoid {
    ax: f64,
    ay: f64,
    az: f64,
    ax2: f64,
    ay2: f64,
    az2: f64,
    ex2: f64,
    ey2: f64,
    ee2: f64,
    p: f64,
    q: f64,
    r: f64,
    /// `1 − e_e² = a_y²/a_x²`
    one_minus_ee2: f64,
    /// `(1 − e_e²)/(1 − e_x²) = a_y²/a_z²`
    lat_ratio: f64,
}

impl TriaxialEllipsoid {
    pub fn new(ax: f64, ay: f64, az: f64) -> Result<Self, EllipsoidError> {
        let valid = ax.is_finite() && ay.is_finite() && az.is_finite() && ax > ay && ay > az && az > 0.0;
        if !valid {
            return Err(EllipsoidError::InvalidAxes(ax, ay, az));
        }
        let ax2 = ax * ax;
        let ay2 = ay * ay;
        let az2 = az * az;
        let p = (ax - az) * (ax + az);
        let q = (ay - az) * (ay + az);
        let r = (ax - ay) * (ax + ay);
        Ok(Self {
            ax,
            ay,
            az,
            ax2,
            ay2,
            az2,
            ex2: p / ax2,
            ey2: q / ay2,
            ee2: r / ax2,
            p,
            q,
            r,
            one_minus_ee2: (ay / ax) * (ay / ax),
            lat_ratio: (ay / az) * (ay / az),
        })
    }

    /// Largest semiaxis.
    pub fn ax(&self) -> f64 {
        self.ax
    }

    /// Middle semiaxis.
    pub fn ay(&self) -> f64 {
        self.ay
    }

    /// Smallest (polar) semiaxis.
    pub fn az(&self) -> f64 {
        self.az
    }

    pub fn ax2(&self) -> f64 {
        self.ax2
    }

    pub fn ay2(&self) -> f64 {
        self.ay2
    }

    pub fn az2(&self) -> f64 {
        self.az2
    }

    /// First eccentricity squared `(a_x² − a_z²)/a_x²`.
    pub fn ex2(&self) -> f64 {
        self.ex2
    }

    /// `(a_y² − a_z²)/a_y²`. Kept for completeness; no transform uses it.
    pub fn ey2(&self) -> f64 {
        self.ey2
    }

    /// Equatorial eccentricity squared `(a_x² − a_y²)/a_x²`.
    pub fn ee2(&self) -> f64 {
        self.ee2
    }

    /// `P = a_x² − a_z²`
    pub fn p(&self) -> f64 {
        self.p
    }

    /// `Q = a_y² − a_z²`
    pub fn q(&self) -> f64 {
        self.q
    }

    /// `R = a_x² − a_y²`
    pub fn r(&self) -> f64 {
        self.r
    }

    /// `f(p)`: negative inside, zero on, positive outside the surface.
    pub fn residual(&self, p: CartesianPoint) -> f64 {
        p.x * p.x / self.ax2 + p.y * p.y / self.ay2 + p.z * p.z / self.az2 - 1.0
    }

    /// Prime vertical radius `ν = a_x / √(1 − e_x² sin²φ − e_e² cos²φ sin²λ)`.
    pub fn prime_vertical_radius(&self, phi: f64, lambda: f64) -> f64 {
        let (sin_phi, cos_phi) = phi.sin_cos();
        let sin_lambda = lambda.sin();
        let w2 = 1.0 - self.ex2 * sin_phi * sin_phi - self.ee2 * cos_phi * cos_phi * sin_lambda * sin_lambda;
        self.ax / w2.sqrt()
    }

    /// Geodetic → Cartesian.
    ///
    /// ```text
    /// X = (ν + h) cos φ cos λ
    /// Y = (ν (1 − e_e²) + h) cos φ sin λ
    /// Z = (ν (1 − e_x²) + h) sin φ
    /// ```
    pub fn geodetic_to_cartesian(&self, g: GeodeticCoord) -> Result<CartesianPoint, EllipsoidError> {
        g.validate()?;
        let lambda = match g.lambda {
            Longitude::Defined(l) => l,
            Longitude::Undefined => 0.0,
        };
        if g.phi.abs() == FRAC_PI_2 {
            // ν(1 − e_x²) = a_z exactly here, and cos(π/2) would leave a 1e-16 residue in X, Y.
            return Ok(CartesianPoint::new(0.0, 0.0, (self.az + g.h).copysign(g.phi)));
        }
        let nu = self.prime_vertical_radius(g.phi, lambda);
        let (sin_phi, cos_phi) = g.phi.sin_cos();
        let (sin_lambda, cos_lambda) = lambda.sin_cos();
        Ok(CartesianPoint::new(
            (nu + g.h) * cos_phi * cos_lambda,
            (nu * self.one_minus_ee2 + g.h) * cos_phi * sin_lambda,
            (nu * (1.0 - self.ex2) + g.h) * sin_phi,
        ))
    }

    /// Latitude and longitude of a point on the surface.
    pub fn footpoint_to_geodetic_angles(&self, fp: CartesianPoint) -> Result<(f64, Longitude), EllipsoidError> {
        let residual = self.residual(fp);
        if residual.is_nan() || residual.abs() > SURFACE_TOLERANCE {
            return Err(EllipsoidError::NotOnSurface { residual });
        }
        Ok(self.surface_angles(fp))
    }

    /// Unchecked angle extraction; the caller guarantees `fp` is a footpoint.
    pub(crate) fn surface_angles(&self, fp: CartesianPoint) -> (f64, Longitude) {
        let CartesianPoint { x, y, z } = fp;
        let lambda = if x > 0.0 {
            Longitude::Defined((y / (self.one_minus_ee2 * x)).atan())
        } else if x < 0.0 {
            let l = (y / (self.one_minus_ee2 * x)).atan() + PI;
            Longitude::Defined(if l > PI { l - 2.0 * PI } else { l })
        } else if y != 0.0 {
            Longitude::Defined(FRAC_PI_2.copysign(y))
        } else {
            Longitude::Undefined
        };
        let phi = if x != 0.0 || y != 0.0 {
            let horizontal = (self.one_minus_ee2 * x).hypot(y);
            (self.lat_ratio * z / horizontal).atan()
        } else {
            FRAC_PI_2.copysign(z)
        };
        (phi, lambda)
    }
}

impl fmt::Display for TriaxialEllipsoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_x = {} km, a_y = {} km, a_z = {} km", self.ax, self.ay, self.az)
    }
}

/// Cartesian coordinates in kilometres in the ellipsoid-centred frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CartesianPoint {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn is_origin(&self) -> bool {
        self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    pub fn distance(&self, other: CartesianPoint) -> f64 {
        (*self - other).norm()
    }

    pub fn cross(&self, other: CartesianPoint) -> CartesianPoint {
        CartesianPoint::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }
}

impl std::ops::Sub for CartesianPoint {
    type Output = CartesianPoint;

    fn sub(self, rhs: Self) -> Self::Output {
        CartesianPoint::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl fmt::Display for CartesianPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Longitude, which has no value on the polar axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Longitude {
    Defined(f64),
    Undefined,
}

impl Longitude {
    pub fn value(self) -> Option<f64> {
        match self {
            Longitude::Defined(l) => Some(l),
            Longitude::Undefined => None,
        }
    }
}

/// Latitude `phi ∈ [−π/2, π/2]`, longitude `lambda ∈ (−π, π]` and signed
/// ellipsoidal height `h` (negative inside the ellipsoid).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodeticCoord {
    pub phi: f64,
    pub lambda: Longitude,
    pub h: f64,
}

impl GeodeticCoord {
    pub fn new(phi: f64, lambda: f64, h: f64) -> Self {
        Self { phi, lambda: Longitude::Defined(lambda), h }
    }

    pub fn validate(&self) -> Result<(), EllipsoidError> {
        if !self.phi.is_finite() || self.phi.abs() > FRAC_PI_2 {
            return Err(EllipsoidError::InvalidGeodetic(format!("latitude {} outside [-pi/2, pi/2]", self.phi)));
        }
        if !self.h.is_finite() {
            return Err(EllipsoidError::InvalidGeodetic(format!("height {} is not finite", self.h)));
        }
        match self.lambda {
            Longitude::Defined(l) if !(l > -PI && l <= PI) => {
                Err(EllipsoidError::InvalidGeodetic(format!("longitude {l} outside (-pi, pi]")))
            }
            Longitude::Undefined if self.phi.abs() != FRAC_PI_2 => {
                Err(EllipsoidError::InvalidGeodetic("longitude may only be undefined at a pole".to_string()))
            }
            _ => Ok(()),
        }
    }
}
