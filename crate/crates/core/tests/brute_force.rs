//! Footpoints in the `Z = 0` plane against a dense scan of the equatorial
//! ellipse for the nearest point.

use std::f64::consts::FRAC_PI_2;

use triaxial_geodesy::{cartesian_to_geodetic, Algorithm, CartesianPoint, TriaxialEllipsoid};

const SAMPLES: usize = 10_000_000;

fn nearest_on_ellipse(ax: f64, ay: f64, x: f64, y: f64) -> (f64, f64, f64) {
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..=SAMPLES {
        let theta = FRAC_PI_2 * i as f64 / SAMPLES as f64;
        let (ex, ey) = (ax * theta.cos(), ay * theta.sin());
        let d = (ex - x).hypot(ey - y);
        if d < best.0 {
            best = (d, ex, ey);
        }
    }
    best
}

#[test]
fn equatorial_points_match_dense_scan() {
    let e = TriaxialEllipsoid::new(3.0, 2.0, 1.0).unwrap();
    for (x, y) in [(0.3, 0.3), (5.0, 1.0), (1.0, 2.5)] {
        let (dist, ex, ey) = nearest_on_ellipse(3.0, 2.0, x, y);
        for alg in Algorithm::BOTH {
            let (g, fp) = cartesian_to_geodetic(alg, &e, CartesianPoint::new(x, y, 0.0)).unwrap();
            assert!((g.h.abs() - dist).abs() <= 1e-12, "{alg} ({x},{y}): |h|={} scan={dist}", g.h.abs());
            assert!(
                (fp.footpoint.x - ex).abs() <= 1e-6 && (fp.footpoint.y - ey).abs() <= 1e-6,
                "{alg} ({x},{y}): {fp:?}"
            );
            assert_eq!(fp.footpoint.z, 0.0);
        }
    }
}
