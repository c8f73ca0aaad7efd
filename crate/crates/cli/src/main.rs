//! `triax`: geodetic conversions on triaxial ellipsoids from the command line.
//!
//! Exit status: 0 on success, 1 when some batch rows failed, 2 on usage or
//! validation errors.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use triaxial_geodesy::bench::{format_table, run_benchmark, write_csv, GridSpec};
use triaxial_geodesy::{
    cartesian_to_geodetic, Algorithm, BodyRecord, BodySource, CartesianPoint, Catalog, GeodeticCoord, Longitude,
    TriaxialEllipsoid,
};

const UNDEFINED: &str = "undefined";
const ERROR_TOKEN: &str = "error";

#[derive(Parser)]
#[command(name = "triax", version, about = "Cartesian/geodetic conversion on triaxial ellipsoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Geodetic (phi lambda h) to Cartesian (X Y Z), lengths in km.
    #[command(allow_negative_numbers = true)]
    Forward {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long)]
        degrees: bool,
        phi: f64,
        /// Longitude, or `undefined` at a pole.
        lambda: String,
        h: f64,
    },
    /// Cartesian (X Y Z) to geodetic (phi lambda h).
    #[command(allow_negative_numbers = true)]
    Inverse {
        #[command(flatten)]
        body: BodyArgs,
        #[command(flatten)]
        method: MethodArgs,
        x: f64,
        y: f64,
        z: f64,
    },
    /// Convert a CSV of X,Y,Z rows (header optional) to phi,lambda,h rows.
    Batch {
        #[command(flatten)]
        body: BodyArgs,
        #[command(flatten)]
        method: MethodArgs,
        /// Input CSV; `-` reads standard input.
        input: PathBuf,
        /// Output CSV; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Round-trip accuracy and timing over the first-octant grid.
    Bench {
        /// Restrict to one body (default: every catalog body).
        #[arg(long)]
        body: Option<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        algo: BenchAlgo,
        /// All 359 × 359 × 9 points instead of every tenth angle.
        #[arg(long)]
        full_grid: bool,
        /// Timed sweeps per body and algorithm; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        /// Also write the report as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the body catalog.
    Bodies {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BodyArgs {
    /// Catalog body name.
    #[arg(long, conflicts_with = "axes", required_unless_present = "axes")]
    body: Option<String>,
    /// Semiaxes `ax,ay,az` in km.
    #[arg(long, value_parser = parse_axes)]
    axes: Option<TriaxialEllipsoid>,
    /// Extra catalog file overlaying the builtin bodies.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long, value_enum, default_value = "2")]
    algo: AlgoChoice,
    /// Report angles in degrees.
    #[arg(long)]
    degrees: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<AlgoChoice> for Algorithm {
    fn from(a: AlgoChoice) -> Self {
        match a {
            AlgoChoice::One => Algorithm::I,
            AlgoChoice::Two => Algorithm::II,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlgo {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

impl BenchAlgo {
    fn algorithms(self) -> &'static [Algorithm] {
        match self {
            BenchAlgo::One => &[Algorithm::I],
            BenchAlgo::Two => &[Algorithm::II],
            BenchAlgo::Both => &Algorithm::BOTH,
        }
    }
}

fn parse_axes(s: &str) -> Result<TriaxialEllipsoid, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [ax, ay, az] = parts.as_slice() else {
        return Err(format!("expected `ax,ay,az`, got `{s}`"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    TriaxialEllipsoid::new(num(ax)?, num(ay)?, num(az)?).map_err(|e| e.to_string())
}

/// Failure that maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, UsageError> {
    Ok(match path {
        Some(p) => Catalog::load(p)?,
        None => Catalog::builtin(),
    })
}

fn resolve(args: &BodyArgs) -> Result<TriaxialEllipsoid, UsageError> {
    if let Some(e) = args.axes {
        return Ok(e);
    }
    let name = args.body.as_deref().ok_or_else(|| UsageError("one of --body or --axes is required".into()))?;
    Ok(load_catalog(&args.catalog)?.get(name)?.ellipsoid)
}

fn angle_in(v: f64, degrees: bool) -> f64 {
    if !degrees {
        return v;
    }
    match v {
        90.0 | -90.0 => FRAC_PI_2.copysign(v),
        180.0 => PI,
        _ => v.to_radians(),
    }
}

fn angle_out(v: f64, degrees: bool) -> f64 {
    if !degrees {
        return v;
    }
    if v.abs() == FRAC_PI_2 {
        90f64.copysign(v)
    } else if v == PI {
        180.0
    } else {
        v.to_degrees()
    }
}

fn format_geodetic(g: &GeodeticCoord, degrees: bool) -> [String; 3] {
    let lambda = match g.lambda {
        Longitude::Defined(l) => angle_out(l, degrees).to_string(),
        Longitude::Undefined => UNDEFINED.to_string(),
    };
    [angle_out(g.phi, degrees).to_string(), lambda, g.h.to_string()]
}

fn forward(body: &BodyArgs, degrees: bool, phi: f64, lambda: &str, h: f64) -> Result<ExitCode, UsageError> {
    let e = resolve(body)?;
    let lambda = if lambda == UNDEFINED {
        Longitude::Undefined
    } else {
        let v: f64 = lambda.parse().map_err(|_| UsageError(format!("invalid longitude `{lambda}`")))?;
        Longitude::Defined(angle_in(v, degrees))
    };
    let g = GeodeticCoord { phi: angle_in(phi, degrees), lambda, h };
    let p = e.geodetic_to_cartesian(g)?;
    println!("{} {} {}", p.x, p.y, p.z);
    Ok(ExitCode::SUCCESS)
}

fn inverse(body: &BodyArgs, method: &MethodArgs, p: CartesianPoint) -> Result<ExitCode, UsageError> {
    let e = resolve(body)?;
    let (g, _) = cartesian_to_geodetic(method.algo.into(), &e, p)?;
    println!("{}", format_geodetic(&g, method.degrees).join(" "));
    Ok(ExitCode::SUCCESS)
}

fn parse_row(record: &csv::StringRecord) -> Option<CartesianPoint> {
    if record.len() != 3 {
        return None;
    }
    let v: Vec<f64> = record.iter().map(|f| f.parse().ok()).collect::<Option<_>>()?;
    Some(CartesianPoint::new(v[0], v[1], v[2]))
}

fn batch(body: &BodyArgs, method: &MethodArgs, input: &PathBuf, out: &Option<PathBuf>) -> Result<ExitCode, UsageError> {
    let e = resolve(body)?;
    let reader: Box<dyn Read> = if input.as_os_str() == "-" {
        Box::new(io::stdin())
    } else {
        Box::new(File::open(input).map_err(|err| UsageError(format!("{}: {err}", input.display())))?)
    };
    let writer: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).map_err(|err| UsageError(format!("{}: {err}", path.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(reader);
    let mut wtr = csv::Writer::from_writer(BufWriter::new(writer));
    let algorithm = Algorithm::from(method.algo);
    let mut failed = 0usize;
    for (idx, record) in rdr.records().enumerate() {
        let record = record?;
        let point = parse_row(&record);
        if idx == 0 && point.is_none() && record.iter().any(|f| f.parse::<f64>().is_err()) {
            wtr.write_record(["phi", "lambda", "h"])?;
            continue;
        }
        match point.map(|p| cartesian_to_geodetic(algorithm, &e, p)) {
            Some(Ok((g, _))) => wtr.write_record(format_geodetic(&g, method.degrees))?,
            Some(Err(err)) => {
                eprintln!("triax: row {}: {err}", idx + 1);
                failed += 1;
                wtr.write_record([ERROR_TOKEN; 3])?;
            }
            None => {
                eprintln!("triax: row {}: expected three numbers `X,Y,Z`", idx + 1);
                failed += 1;
                wtr.write_record([ERROR_TOKEN; 3])?;
            }
        }
    }
    wtr.flush()?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn bench(
    body: &Option<String>,
    catalog: &Option<PathBuf>,
    algo: BenchAlgo,
    full_grid: bool,
    repeat: usize,
    out: &Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let catalog = load_catalog(catalog)?;
    let bodies: Vec<&BodyRecord> = match body {
        Some(name) => vec![catalog.get(name)?],
        None => catalog.bodies().iter().collect(),
    };
    let grid = if full_grid { GridSpec::full() } else { GridSpec::desk() };
    let mut reports = Vec::new();
    for b in bodies {
        for &alg in algo.algorithms() {
            reports.push(run_benchmark(b, &grid, alg, repeat)?);
        }
    }
    print!("{}", format_table(&reports));
    if let Some(path) = out {
        let file = File::create(path).map_err(|err| UsageError(format!("{}: {err}", path.display())))?;
        write_csv(&reports, file)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn bodies(catalog: &Option<PathBuf>) -> Result<ExitCode, UsageError> {
    let catalog = load_catalog(catalog)?;
    println!("{:<12} {:>14} {:>14} {:>14}  source", "name", "a_x [km]", "a_y [km]", "a_z [km]");
    for b in catalog.bodies() {
        let e = &b.ellipsoid;
        let source = match b.source {
            BodySource::Builtin => "builtin",
            BodySource::User => "user",
        };
        println!("{:<12} {:>14} {:>14} {:>14}  {source}", b.name, e.ax(), e.ay(), e.az());
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Forward { body, degrees, phi, lambda, h } => forward(body, *degrees, *phi, lambda, *h),
        Command::Inverse { body, method, x, y, z } => inverse(body, method, CartesianPoint::new(*x, *y, *z)),
        Command::Batch { body, method, input, out } => batch(body, method, input, out),
        Command::Bench { body, catalog, algo, full_grid, repeat, out } => {
            bench(body, catalog, *algo, *full_grid, *repeat, out)
        }
        Command::Bodies { catalog } => bodies(catalog),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("triax: {msg}");
            ExitCode::from(2)
        }
    }
}
