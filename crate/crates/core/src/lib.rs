//! Direct conversion between Cartesian and geodetic coordinates on a
//! triaxial ellipsoid.
//!
//! The footpoint of a point is found as the unique positive real root of a
//! degree-six polynomial whose coefficients are closed-form expressions in
//! the semiaxes and the point's coordinates. Descartes' rule of signs
//! guarantees the root is unique, so a bracketed Newton iteration finds it
//! without any starting guess.
//!
//! ```
//! use triaxial_geodesy::{Catalog, CartesianPoint, GeodeticCoord, Algorithm, cartesian_to_geodetic};
//!
//! let earth = Catalog::builtin().get("Earth").unwrap().ellipsoid;
//! let p = earth.geodetic_to_cartesian(GeodeticCoord::new(0.7, -1.2, 12.5)).unwrap();
//! let (g, _) = cartesian_to_geodetic(Algorithm::II, &earth, p).unwrap();
//! assert!((g.phi - 0.7).abs() < 1e-14);
//! assert!((g.h - 12.5).abs() < 1e-9);
//! ```

pub mod bench;
pub mod bodies;
pub mod ellipsoid;
pub mod polynomials;
pub mod rootfinding;
pub mod transform;

pub use bodies::{BodyRecord, BodySource, Catalog, CatalogError};
pub use ellipsoid::{CartesianPoint, EllipsoidError, GeodeticCoord, Longitude, TriaxialEllipsoid, SURFACE_TOLERANCE};
pub use polynomials::{PolyCoeffs, PolyKind, RegionClass, Sign, SignPattern};
pub use rootfinding::{Bracket, RootError};
pub use transform::{
    cartesian_to_geodetic, cartesian_to_geodetic_i, cartesian_to_geodetic_ii, Algorithm, FootpointResult, Side,
    TransformError,
};
