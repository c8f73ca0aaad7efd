//! Round-trip accuracy and timing sweep over a first-octant geodetic grid.
//!
//! Each grid point `(φ_i, λ_j, h_k) = (iπ/720, jπ/720, k·a_z)` is mapped to
//! Cartesian coordinates with the forward transform and back with the
//! selected inverse algorithm; the largest absolute angle and height
//! differences are kept.

use std::f64::consts::PI;
use std::io::{Read, Write};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bodies::BodyRecord;
use crate::ellipsoid::{GeodeticCoord, Longitude, TriaxialEllipsoid};
use crate::transform::{cartesian_to_geodetic, Algorithm, TransformError};

pub const ANGLE_STEP: f64 = PI / 720.0;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("grid point (i={i}, j={j}, k={k}): {source}")]
    Transform {
        i: u32,
        j: u32,
        k: usize,
        #[source]
        source: TransformError,
    },
    #[error("grid point (i={i}, j={j}, k={k}): recovered longitude is undefined")]
    UndefinedLongitude { i: u32, j: u32, k: usize },
    #[error("report I/O: {0}")]
    Csv(#[from] csv::Error),
    #[error("report I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// Height above the surface as a fraction `num/den` of `a_z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightFactor {
    pub num: i32,
    pub den: i32,
}

impl HeightFactor {
    pub const fn new(num: i32, den: i32) -> Self {
        Self { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

pub const HEIGHT_FACTORS: [HeightFactor; 9] = [
    HeightFactor::new(0, 1),
    HeightFactor::new(1, 50),
    HeightFactor::new(-1, 50),
    HeightFactor::new(1, 25),
    HeightFactor::new(-1, 25),
    HeightFactor::new(1, 15),
    HeightFactor::new(-1, 15),
    HeightFactor::new(1, 10),
    HeightFactor::new(-1, 10),
];

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    lat_indices: Vec<u32>,
    lon_indices: Vec<u32>,
    height_factors: Vec<HeightFactor>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub i: u32,
    pub j: u32,
    /// Index into the grid's height factors.
    pub k: usize,
    pub phi: f64,
    pub lambda: f64,
    pub height_factor: f64,
}

impl GridSpec {
    /// Angle indices must lie in `1..=359`, which keeps every point off the
    /// equator, the poles and the `x`/`y` meridian planes.
    pub fn new(
        lat_indices: Vec<u32>,
        lon_indices: Vec<u32>,
        height_factors: Vec<HeightFactor>,
    ) -> Result<Self, BenchError> {
        for (label, set) in [("latitude", &lat_indices), ("longitude", &lon_indices)] {
            if let Some(bad) = set.iter().find(|&&i| !(1..=359).contains(&i)) {
                return Err(BenchError::InvalidGrid(format!("{label} index {bad} outside 1..=359")));
            }
        }
        if let Some(bad) = height_factors.iter().find(|f| f.den == 0) {
            return Err(BenchError::InvalidGrid(format!("height factor {}/0", bad.num)));
        }
        Ok(Self { lat_indices, lon_indices, height_factors })
    }

    /// The full 359 × 359 × 9 grid.
    pub fn full() -> Self {
        Self::new((1..=359).collect(), (1..=359).collect(), HEIGHT_FACTORS.to_vec()).unwrap()
    }

    /// Every tenth angle index (35 × 35 × 9 points).
    pub fn desk() -> Self {
        Self::strided(10)
    }

    pub fn strided(step: u32) -> Self {
        let idx: Vec<u32> = (step..=359).step_by(step as usize).collect();
        Self::new(idx.clone(), idx, HEIGHT_FACTORS.to_vec()).unwrap()
    }

    pub fn lat_indices(&self) -> &[u32] {
        &self.lat_indices
    }

    pub fn lon_indices(&self) -> &[u32] {
        &self.lon_indices
    }

    pub fn height_factors(&self) -> &[HeightFactor] {
        &self.height_factors
    }

    pub fn point_count(&self) -> usize {
        self.lat_indices.len() * self.lon_indices.len() * self.height_factors.len()
    }

    /// Points in latitude-major, then longitude, then height order.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.lat_indices.iter().flat_map(move |&i| {
            self.lon_indices.iter().flat_map(move |&j| {
                self.height_factors.iter().enumerate().map(move |(k, f)| GridPoint {
                    i,
                    j,
                    k,
                    phi: i as f64 * ANGLE_STEP,
                    lambda: j as f64 * ANGLE_STEP,
                    height_factor: f.value(),
                })
            })
        })
    }
}

pub fn full_grid() -> GridSpec {
    GridSpec::full()
}

/// Largest absolute errors: radians for the angles, km for the height.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MaxErrors {
    pub lambda: f64,
    pub phi: f64,
    pub h: f64,
}

impl MaxErrors {
    pub fn merge(self, other: MaxErrors) -> MaxErrors {
        MaxErrors { lambda: self.lambda.max(other.lambda), phi: self.phi.max(other.phi), h: self.h.max(other.h) }
    }
}

/// Forward then inverse for one grid point.
pub fn point_errors(e: &TriaxialEllipsoid, algorithm: Algorithm, gp: GridPoint) -> Result<MaxErrors, BenchError> {
    let h = gp.height_factor * e.az();
    let truth = GeodeticCoord::new(gp.phi, gp.lambda, h);
    let cartesian = e
        .geodetic_to_cartesian(truth)
        .map_err(|err| BenchError::InvalidGrid(format!("point (i={}, j={}, k={}): {err}", gp.i, gp.j, gp.k)))?;
    let (recovered, _) = cartesian_to_geodetic(algorithm, e, cartesian).map_err(|source| BenchError::Transform {
        i: gp.i,
        j: gp.j,
        k: gp.k,
        source,
    })?;
    let Longitude::Defined(lambda) = recovered.lambda else {
        return Err(BenchError::UndefinedLongitude { i: gp.i, j: gp.j, k: gp.k });
    };
    Ok(MaxErrors {
        lambda: (lambda - gp.lambda).abs(),
        phi: (recovered.phi - gp.phi).abs(),
        h: (recovered.h - h).abs(),
    })
}

pub fn max_errors(
    e: &TriaxialEllipsoid,
    algorithm: Algorithm,
    points: impl IntoIterator<Item = GridPoint>,
) -> Result<MaxErrors, BenchError> {
    points.into_iter().try_fold(MaxErrors::default(), |acc, gp| Ok(acc.merge(point_errors(e, algorithm, gp)?)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub body: String,
    pub algorithm: Algorithm,
    pub max_abs_err_lambda: f64,
    pub max_abs_err_phi: f64,
    pub max_abs_err_h: f64,
    /// Fastest of the repeated single-threaded sweeps, error bookkeeping included.
    pub sweep_time: Duration,
    pub point_count: usize,
}

impl ErrorReport {
    pub fn log10_err_lambda(&self) -> f64 {
        self.max_abs_err_lambda.log10()
    }

    pub fn log10_err_phi(&self) -> f64 {
        self.max_abs_err_phi.log10()
    }

    pub fn log10_err_h(&self) -> f64 {
        self.max_abs_err_h.log10()
    }

    pub fn errors(&self) -> MaxErrors {
        MaxErrors { lambda: self.max_abs_err_lambda, phi: self.max_abs_err_phi, h: self.max_abs_err_h }
    }
}

/// Times `repeat` serial sweeps (at least one) and reports the fastest.
pub fn run_benchmark(
    body: &BodyRecord,
    grid: &GridSpec,
    algorithm: Algorithm,
    repeat: usize,
) -> Result<ErrorReport, BenchError> {
    let e = &body.ellipsoid;
    let mut best: Option<(Duration, MaxErrors)> = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let errors = max_errors(e, algorithm, grid.points())?;
        let elapsed = start.elapsed();
        if best.is_none_or(|(t, _)| elapsed < t) {
            best = Some((elapsed, errors));
        }
    }
    let (sweep_time, errors) = best.expect("at least one sweep");
    Ok(ErrorReport {
        body: body.name.clone(),
        algorithm,
        max_abs_err_lambda: errors.lambda,
        max_abs_err_phi: errors.phi,
        max_abs_err_h: errors.h,
        sweep_time,
        point_count: grid.point_count(),
    })
}

/// One CSV row of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub body: String,
    pub algorithm: String,
    pub log10_err_lambda: f64,
    pub log10_err_phi: f64,
    pub log10_err_h: f64,
    pub time_s: f64,
    pub points: usize,
}

impl From<&ErrorReport> for ReportRow {
    fn from(r: &ErrorReport) -> Self {
        ReportRow {
            body: r.body.clone(),
            algorithm: r.algorithm.id().to_string(),
            log10_err_lambda: r.log10_err_lambda(),
            log10_err_phi: r.log10_err_phi(),
            log10_err_h: r.log10_err_h(),
            time_s: r.sweep_time.as_secs_f64(),
            points: r.point_count,
        }
    }
}

const CSV_HEADER: [&str; 7] =
    ["body", "algorithm", "log10_err_lambda", "log10_err_phi", "log10_err_h", "time_s", "points"];

/// Header plus one row per report. An exact zero error is written as `-inf`.
pub fn write_csv<W: Write>(reports: &[ErrorReport], out: W) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.serialize(ReportRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ReportRow>, BenchError> {
    let mut rdr = csv::Reader::from_reader(input);
    Ok(rdr.deserialize().collect::<Result<_, _>>()?)
}

/// Aligned plain-text table.
pub fn format_table(reports: &[ErrorReport]) -> String {
    let mut out = format!(
        "{:<12} {:>4} {:>16} {:>16} {:>16} {:>12} {:>10}\n",
        "body", "alg", "log10 err lambda", "log10 err phi", "log10 err h", "time [s]", "points"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<12} {:>4} {:>16.3} {:>16.3} {:>16.3} {:>12.6} {:>10}\n",
            r.body,
            r.algorithm.id(),
            r.log10_err_lambda(),
            r.log10_err_phi(),
            r.log10_err_h(),
            r.sweep_time.as_secs_f64(),
            r.point_count
        ));
    }
    out
}
