//! Command-line front end.
//!
//! Every command writes one JSON document with `"schema_version": "1"` (or CSV where
//! supported). Floats are written with 17 significant digits. Exit codes: `0` success,
//! `1` usage or parse error, `2` the input is not a valid state.
//!
//! Complex matrices are row-major arrays of `[re, im]` pairs.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use serde_json::Value;

use crate::adjoint::orbit_sample;
use crate::bloch::{Vec8, DEFAULT_TOL};
use crate::density::{unchecked_matrix, Density3};
use crate::error::Error;
use crate::matrix::CMat3;
use crate::triangle::{contour_on_grid, entropy_grid, named_points};

pub const SCHEMA_VERSION: &str = "1";

/// Fixed CSV header of the `triangle` command.
pub const TRIANGLE_CSV_HEADER: [&str; 6] = ["n3", "n8", "q1", "q2", "in_region", "entropy"];

#[derive(Parser, Debug)]
#[command(name = "qutrit", version, about = "Qutrit Bloch-vector toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Slack for the state predicates.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Read the input vector or matrix as JSON from this file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Read the input vector or matrix as JSON from stdin.
    #[arg(long, global = true)]
    stdin: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validity report for a Bloch vector.
    Check {
        #[arg(allow_negative_numbers = true)]
        values: Vec<f64>,
    },
    /// Convert between Bloch vectors and density matrices.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        /// Eight Bloch components, or 9 real / 18 (re, im) matrix entries row-major.
        #[arg(allow_negative_numbers = true)]
        values: Vec<f64>,
    },
    /// Constraint values and entropy on the bounding-box grid of the triangle.
    Triangle {
        #[arg(long, default_value_t = 200)]
        resolution: usize,
    },
    /// Equi-entropy curves.
    Contour {
        /// Comma-separated levels in (0, 1).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        levels: String,
        #[arg(long, default_value_t = 200)]
        resolution: usize,
    },
    /// Haar-random points on the unitary orbit of a state.
    Orbit {
        #[arg(allow_negative_numbers = true)]
        values: Vec<f64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The labelled vertices, edge midpoints and centre with their matrices.
    NamedPoints,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    BlochToRho,
    RhoToBloch,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    1
                }
            };
        }
    };
    let mut out = Vec::new();
    let result = dispatch(&cli, stdin, &mut out);
    // Partial output is still written: `check` reports on invalid states.
    let _ = stdout.write_all(&out);
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Result<(), Failure> {
    if !(cli.tol >= 0.0 && cli.tol.is_finite()) {
        return Err(Failure::Usage(format!(
            "--tol must be a non-negative number, got {}",
            cli.tol
        )));
    }
    let csv_ok = matches!(cli.command, Command::Triangle { .. } | Command::NamedPoints);
    if cli.format == Format::Csv && !csv_ok {
        return Err(Failure::Usage(
            "--format csv is only supported by triangle and named-points".into(),
        ));
    }
    match &cli.command {
        Command::Check { values } => {
            let n = read_vector(cli, values, stdin)?;
            cmd_check(&n, cli.tol, out)
        }
        Command::Convert {
            direction: Direction::BlochToRho,
            values,
        } => {
            let n = read_vector(cli, values, stdin)?;
            let rho = Density3::from_bloch_with_tol(&n, cli.tol).map_err(domain)?;
            emit(
                out,
                "convert",
                &RhoPayload {
                    rho: matrix_json(rho.matrix()),
                },
            )
        }
        Command::Convert {
            direction: Direction::RhoToBloch,
            values,
        } => {
            let m = read_matrix(cli, values, stdin)?;
            let rho = Density3::from_matrix(m).map_err(domain)?;
            emit(
                out,
                "convert",
                &BlochPayload {
                    bloch: floats(rho.to_bloch().as_array()),
                },
            )
        }
        Command::Triangle { resolution } => cmd_triangle(*resolution, cli.format, out),
        Command::Contour { levels, resolution } => cmd_contour(levels, *resolution, cli.tol, out),
        Command::Orbit {
            values,
            count,
            seed,
        } => {
            let n = read_vector(cli, values, stdin)?;
            if *count < 1 {
                return Err(Failure::Usage("--count must be at least 1".into()));
            }
            let samples = orbit_sample(&n, *count, *seed).map_err(domain)?;
            let payload = OrbitPayload {
                input: floats(n.as_array()),
                count: *count,
                seed: *seed,
                samples: samples.iter().map(|v| floats(v.as_array())).collect(),
            };
            emit(out, "orbit", &payload)
        }
        Command::NamedPoints => cmd_named_points(cli.format, out),
    }
}

fn domain(e: Error) -> Failure {
    Failure::Domain(e.to_string())
}

fn cmd_check(n: &Vec8, tol: f64, out: &mut Vec<u8>) -> Result<(), Failure> {
    let (q1, q2) = n.constraint_values();
    let violation = n.mixed_state_violation(tol);
    let valid = violation.is_none();
    let eigenvalues = unchecked_matrix(n).hermitian_eigenvalues();
    let entropy = valid.then(|| crate::density::entropy_base3(&eigenvalues));
    let payload = CheckPayload {
        bloch: floats(n.as_array()),
        norm_sqr: F17(q1),
        cubic: F17(q2),
        valid,
        pure: n.is_pure(tol),
        eigenvalues: floats(&eigenvalues),
        entropy: entropy.map(F17),
        violation: violation.map(|(c, v)| ViolationJson {
            constraint: c.to_string(),
            value: F17(v),
        }),
    };
    emit(out, "check", &payload)?;
    match violation {
        None => Ok(()),
        Some((c, v)) => Err(Failure::Domain(format!(
            "constraint {c} violated (value {v})"
        ))),
    }
}

fn cmd_triangle(resolution: usize, format: Format, out: &mut Vec<u8>) -> Result<(), Failure> {
    let grid = entropy_grid(resolution).map_err(|e| Failure::Usage(e.to_string()))?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(TRIANGLE_CSV_HEADER)?;
            for s in &grid.samples {
                w.write_record([
                    fmt_f64(s.point.n3),
                    fmt_f64(s.point.n8),
                    fmt_f64(s.q1),
                    fmt_f64(s.q2),
                    s.in_region().to_string(),
                    s.entropy.map(fmt_f64).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            let rows = grid
                .samples
                .iter()
                .map(|s| {
                    TriangleRow(
                        F17(s.point.n3),
                        F17(s.point.n8),
                        F17(s.q1),
                        F17(s.q2),
                        s.in_region(),
                        s.entropy.map(F17),
                    )
                })
                .collect();
            emit(
                out,
                "triangle",
                &TrianglePayload {
                    resolution,
                    columns: TRIANGLE_CSV_HEADER,
                    rows,
                },
            )
        }
    }
}

fn cmd_contour(
    levels: &str,
    resolution: usize,
    tol: f64,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    let levels = parse_levels(levels)?;
    let mut contours = Vec::with_capacity(levels.len());
    if !levels.is_empty() {
        let grid = entropy_grid(resolution).map_err(|e| Failure::Usage(e.to_string()))?;
        for level in levels {
            let lines = contour_on_grid(&grid, level, tol).map_err(|e| match e {
                Error::InvalidLevel { .. } => Failure::Usage(e.to_string()),
                _ => Failure::Domain(e.to_string()),
            })?;
            let polylines = lines
                .into_iter()
                .map(|l| PolylineJson {
                    closed: l.closed,
                    points: l.points.iter().map(|p| [F17(p.n3), F17(p.n8)]).collect(),
                })
                .collect();
            contours.push(ContourJson {
                level: F17(level),
                polylines,
            });
        }
    }
    emit(
        out,
        "contour",
        &ContourPayload {
            resolution,
            contours,
        },
    )
}

fn cmd_named_points(format: Format, out: &mut Vec<u8>) -> Result<(), Failure> {
    let points = named_points();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["label", "n3", "n8", "rho11", "rho22", "rho33"])?;
            for p in &points {
                let m = p.density.matrix();
                w.write_record([
                    p.label.to_string(),
                    fmt_f64(p.point.n3),
                    fmt_f64(p.point.n8),
                    fmt_f64(m.m[0][0].re),
                    fmt_f64(m.m[1][1].re),
                    fmt_f64(m.m[2][2].re),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            let points = points
                .iter()
                .map(|p| NamedPointJson {
                    label: p.label,
                    n3: F17(p.point.n3),
                    n8: F17(p.point.n8),
                    bloch: floats(p.point.to_vec8().as_array()),
                    rho: matrix_json(p.density.matrix()),
                })
                .collect();
            emit(out, "named-points", &NamedPointsPayload { points })
        }
    }
}

fn parse_levels(s: &str) -> Result<Vec<f64>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            let level: f64 = part
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("level '{}' is not a number", part.trim())))?;
            if level > 0.0 && level < 1.0 {
                Ok(level)
            } else {
                Err(Failure::Usage(format!(
                    "level {level} outside the open interval (0, 1)"
                )))
            }
        })
        .collect()
}

/// JSON text from `--input` or `--stdin`, if either was given.
fn json_source(
    cli: &Cli,
    positional: &[f64],
    stdin: &mut dyn Read,
) -> Result<Option<Value>, Failure> {
    let text = match (&cli.input, cli.stdin) {
        (Some(_), true) => {
            return Err(Failure::Usage(
                "--input and --stdin are mutually exclusive".into(),
            ))
        }
        (Some(path), false) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, true) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
        (None, false) => return Ok(None),
    };
    if !positional.is_empty() {
        return Err(Failure::Usage(
            "positional values cannot be combined with --input/--stdin".into(),
        ));
    }
    Ok(Some(serde_json::from_str(&text)?))
}

fn read_vector(cli: &Cli, positional: &[f64], stdin: &mut dyn Read) -> Result<Vec8, Failure> {
    let values = match json_source(cli, positional, stdin)? {
        Some(v) => {
            let arr = v
                .as_array()
                .ok_or_else(|| Failure::Usage("expected a JSON array of 8 numbers".into()))?;
            arr.iter()
                .map(|x| {
                    x.as_f64()
                        .ok_or_else(|| Failure::Usage(format!("not a number: {x}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        None => positional.to_vec(),
    };
    if values.len() != 8 {
        return Err(Failure::Usage(format!(
            "expected 8 Bloch components, got {}",
            values.len()
        )));
    }
    Vec8::from_slice(&values).map_err(|e| Failure::Usage(e.to_string()))
}

fn read_matrix(cli: &Cli, positional: &[f64], stdin: &mut dyn Read) -> Result<CMat3, Failure> {
    let entries: Vec<Complex64> = match json_source(cli, positional, stdin)? {
        Some(v) => parse_matrix_json(&v)?,
        None => match positional.len() {
            9 => positional.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            18 => positional
                .chunks(2)
                .map(|c| Complex64::new(c[0], c[1]))
                .collect(),
            n => {
                return Err(Failure::Usage(format!(
                    "expected 9 real or 18 (re, im) matrix entries, got {n}"
                )))
            }
        },
    };
    let mut m = CMat3::ZERO;
    for (k, z) in entries.into_iter().enumerate() {
        m.m[k / 3][k % 3] = z;
    }
    if !m.is_finite() {
        return Err(Failure::Usage("matrix entries must be finite".into()));
    }
    Ok(m)
}

/// Three rows of three entries, each a number or an `[re, im]` pair.
fn parse_matrix_json(v: &Value) -> Result<Vec<Complex64>, Failure> {
    let bad = || Failure::Usage("expected a 3x3 JSON array of numbers or [re, im] pairs".into());
    let rows = v.as_array().filter(|r| r.len() == 3).ok_or_else(bad)?;
    let mut entries = Vec::with_capacity(9);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == 3).ok_or_else(bad)?;
        for x in row {
            let z = match x {
                Value::Number(n) => Complex64::new(n.as_f64().ok_or_else(bad)?, 0.0),
                Value::Array(pair) if pair.len() == 2 => Complex64::new(
                    pair[0].as_f64().ok_or_else(bad)?,
                    pair[1].as_f64().ok_or_else(bad)?,
                ),
                _ => return Err(bad()),
            };
            entries.push(z);
        }
    }
    Ok(entries)
}

/// Scientific notation with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A float serialized with [`fmt_f64`].
struct F17(f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!("non-finite value {}", self.0)));
        }
        RawValue::from_string(fmt_f64(self.0))
            .map_err(S::Error::custom)?
            .serialize(s)
    }
}

fn floats(xs: &[f64]) -> Vec<F17> {
    xs.iter().map(|&x| F17(x)).collect()
}

fn matrix_json(m: &CMat3) -> Vec<Vec<[F17; 2]>> {
    m.m.iter()
        .map(|row| row.iter().map(|z| [F17(z.re), F17(z.im)]).collect())
        .collect()
}

#[derive(Serialize)]
struct Record<'a, T> {
    schema_version: &'static str,
    command: &'static str,
    payload: &'a T,
}

fn emit<T: Serialize>(
    out: &mut Vec<u8>,
    command: &'static str,
    payload: &T,
) -> Result<(), Failure> {
    let record = Record {
        schema_version: SCHEMA_VERSION,
        command,
        payload,
    };
    serde_json::to_writer(&mut *out, &record)?;
    out.push(b'\n');
    Ok(())
}

#[derive(Serialize)]
struct ViolationJson {
    constraint: String,
    value: F17,
}

#[derive(Serialize)]
struct CheckPayload {
    bloch: Vec<F17>,
    norm_sqr: F17,
    cubic: F17,
    valid: bool,
    pure: bool,
    eigenvalues: Vec<F17>,
    entropy: Option<F17>,
    violation: Option<ViolationJson>,
}

#[derive(Serialize)]
struct RhoPayload {
    rho: Vec<Vec<[F17; 2]>>,
}

#[derive(Serialize)]
struct BlochPayload {
    bloch: Vec<F17>,
}

#[derive(Serialize)]
struct TriangleRow(F17, F17, F17, F17, bool, Option<F17>);

#[derive(Serialize)]
struct TrianglePayload {
    resolution: usize,
    columns: [&'static str; 6],
    rows: Vec<TriangleRow>,
}

#[derive(Serialize)]
struct PolylineJson {
    closed: bool,
    points: Vec<[F17; 2]>,
}

#[derive(Serialize)]
struct ContourJson {
    level: F17,
    polylines: Vec<PolylineJson>,
}

#[derive(Serialize)]
struct ContourPayload {
    resolution: usize,
    contours: Vec<ContourJson>,
}

#[derive(Serialize)]
struct OrbitPayload {
    input: Vec<F17>,
    count: usize,
    seed: u64,
    samples: Vec<Vec<F17>>,
}

#[derive(Serialize)]
struct NamedPointJson {
    label: &'static str,
    n3: F17,
    n8: F17,
    bloch: Vec<F17>,
    rho: Vec<Vec<[F17; 2]>>,
}

#[derive(Serialize)]
struct NamedPointsPayload {
    points: Vec<NamedPointJson>,
}
