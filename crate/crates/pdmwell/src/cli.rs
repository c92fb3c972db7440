//! Command-line front end: spectra, potential/wavefunction tables, and the
//! finite-difference verification, emitted as CSV or JSON.
//!
//! Exit codes: 0 on success, 1 when a verification level fails its
//! tolerance, 2 on usage or parameter errors. All results go to stdout,
//! diagnostics to stderr. Identical invocations produce byte-identical
//! output; floats are printed with 17 significant digits so that every
//! value round-trips to the same f64.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::models::{HarmonicPdmWell, SechPdmWell};
use crate::numsolve::{verify_model, SolverConfig, VerificationReport};
use crate::pct::PdmWell;

#[derive(Debug, Parser)]
#[command(
    name = "pdmwell",
    about = "Semi-infinite quantum wells for a position-dependent mass: closed-form spectra, wavefunctions, and finite-difference verification",
    disable_help_subcommand = true
)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analytic bound-state spectrum of a well.
    Spectrum {
        #[command(flatten)]
        well: WellArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sampled effective potential and mass profile.
    Potential {
        #[command(flatten)]
        well: WellArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Sampled normalized bound-state wavefunctions.
    Wavefunctions {
        #[command(flatten)]
        well: WellArgs,
        #[command(flatten)]
        format: FormatArg,
        #[command(flatten)]
        range: RangeArgs,
        /// Comma-separated level indices (default: all bound levels).
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<usize>>,
    },
    /// Verify analytic levels against the finite-difference solver (JSON report).
    Verify {
        #[command(flatten)]
        well: WellArgs,
        /// Number of levels to verify (default: all bound levels).
        #[arg(long)]
        k: Option<usize>,
        /// Wall offset of the truncated domain, x_lo = -a + delta.
        #[arg(long)]
        delta: Option<f64>,
        /// Truncation radius x_hi.
        #[arg(long = "L")]
        x_max: Option<f64>,
        /// Number of grid points.
        #[arg(long = "n-points")]
        n_points: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct WellArgs {
    /// Well family.
    #[arg(long, value_enum)]
    well: WellKind,
    /// Wall position parameter a > 0 (infinite wall at x = -a).
    #[arg(long)]
    a: f64,
    /// Frequency omega > 0 (harmonic well only).
    #[arg(long)]
    omega: Option<f64>,
    /// Depth scale V0 > 0 (sech well only).
    #[arg(long)]
    v0: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WellKind {
    Harmonic,
    Sech,
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct RangeArgs {
    /// Lower end of the sampled range (default: the wall at -a).
    #[arg(long = "x-min", allow_negative_numbers = true)]
    x_min: Option<f64>,
    /// Upper end of the sampled range (default: -a + 10 for the sech well,
    /// -a + 10a for the harmonic well).
    #[arg(long = "x-max", allow_negative_numbers = true)]
    x_max: Option<f64>,
    /// Number of sample points.
    #[arg(long, default_value_t = 501)]
    samples: usize,
}

/// Parsed well specification: the concrete model plus the parameters that
/// identify it in reports.
enum WellSpec {
    Harmonic(HarmonicPdmWell),
    Sech(SechPdmWell),
}

impl WellSpec {
    fn build(args: &WellArgs) -> Result<Self, Error> {
        match args.well {
            WellKind::Harmonic => {
                let omega = args.omega.ok_or_else(|| {
                    Error::InvalidParameter("--omega is required for --well harmonic".to_string())
                })?;
                if args.v0.is_some() {
                    return Err(Error::InvalidParameter(
                        "--v0 does not apply to --well harmonic".to_string(),
                    ));
                }
                Ok(Self::Harmonic(HarmonicPdmWell::new(omega, args.a)?))
            }
            WellKind::Sech => {
                let v0 = args.v0.ok_or_else(|| {
                    Error::InvalidParameter("--v0 is required for --well sech".to_string())
                })?;
                if args.omega.is_some() {
                    return Err(Error::InvalidParameter(
                        "--omega does not apply to --well sech".to_string(),
                    ));
                }
                Ok(Self::Sech(SechPdmWell::new(args.a, v0)?))
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Self::Harmonic(_) => "harmonic",
            Self::Sech(_) => "sech",
        }
    }

    fn params(&self) -> WellParams {
        match self {
            Self::Harmonic(w) => WellParams {
                a: w.a(),
                omega: Some(w.omega()),
                v0: None,
            },
            Self::Sech(w) => WellParams {
                a: w.a(),
                omega: None,
                v0: Some(w.v0()),
            },
        }
    }

    fn as_well(&self) -> &dyn PdmWell {
        match self {
            Self::Harmonic(w) => w,
            Self::Sech(w) => w,
        }
    }

    fn default_x_max(&self) -> f64 {
        match self {
            Self::Harmonic(w) => -w.a() + 10.0 * w.a(),
            Self::Sech(w) => -w.a() + 10.0,
        }
    }
}

#[derive(Debug, Serialize)]
struct WellParams {
    a: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v0: Option<f64>,
}

#[derive(Serialize)]
struct Report<R: Serialize> {
    well: &'static str,
    params: WellParams,
    results: R,
}

#[derive(Serialize)]
struct SpectrumResults {
    bound_count: usize,
    continuum_threshold: f64,
    levels: Vec<SpectrumLevel>,
}

#[derive(Serialize)]
struct SpectrumLevel {
    n: usize,
    energy: f64,
}

#[derive(Serialize)]
struct PotentialResults {
    rows: Vec<PotentialRow>,
}

#[derive(Serialize)]
struct PotentialRow {
    x: f64,
    v_eff: Option<f64>,
    mass: Option<f64>,
}

#[derive(Serialize)]
struct WavefunctionResults {
    levels: Vec<usize>,
    rows: Vec<WavefunctionRow>,
}

#[derive(Serialize)]
struct WavefunctionRow {
    x: f64,
    psi: Vec<f64>,
}

/// Run the CLI on the given arguments, writing results to `out` and
/// diagnostics to `err`; returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let parsed = match CliArgs::try_parse_from(args) {
        Ok(p) => p,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(
                if code == 0 { &mut *out as &mut dyn Write } else { err },
                "{e}"
            );
            return code;
        }
    };
    match dispatch(parsed, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch<W: Write, E: Write>(args: CliArgs, out: &mut W, err: &mut E) -> Result<i32, Error> {
    match args.command {
        Command::Spectrum { well, format } => {
            let spec = WellSpec::build(&well)?;
            cmd_spectrum(&spec, format.format, out)?;
            Ok(0)
        }
        Command::Potential {
            well,
            format,
            range,
        } => {
            let spec = WellSpec::build(&well)?;
            cmd_potential(&spec, &range, format.format, out)?;
            Ok(0)
        }
        Command::Wavefunctions {
            well,
            format,
            range,
            levels,
        } => {
            let spec = WellSpec::build(&well)?;
            cmd_wavefunctions(&spec, levels.as_deref(), &range, format.format, out)?;
            Ok(0)
        }
        Command::Verify {
            well,
            k,
            delta,
            x_max,
            n_points,
        } => {
            let spec = WellSpec::build(&well)?;
            cmd_verify(&spec, k, delta, x_max, n_points, out, err)
        }
    }
}

/// 17 significant digits: enough for exact f64 round-trips.
fn fmt_float(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        }
    } else {
        format!("{v:.16e}")
    }
}

fn finite_or_none(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

fn sample_range(spec: &WellSpec, range: &RangeArgs) -> Result<Vec<f64>, Error> {
    let x_min = range.x_min.unwrap_or_else(|| spec.as_well().wall());
    let x_max = range.x_max.unwrap_or_else(|| spec.default_x_max());
    if x_max.is_nan() || x_min.is_nan() || x_max <= x_min {
        return Err(Error::InvalidParameter(format!(
            "empty sample range [{x_min}, {x_max}]"
        )));
    }
    if range.samples < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 samples, got {}",
            range.samples
        )));
    }
    let h = (x_max - x_min) / (range.samples - 1) as f64;
    Ok((0..range.samples).map(|i| x_min + i as f64 * h).collect())
}

fn cmd_spectrum<W: Write>(
    spec: &WellSpec,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), Error> {
    let well = spec.as_well();
    let results = SpectrumResults {
        bound_count: well.bound_count(),
        continuum_threshold: well.continuum_threshold(),
        levels: well
            .energies()
            .iter()
            .enumerate()
            .map(|(n, &energy)| SpectrumLevel { n, energy })
            .collect(),
    };
    match format {
        OutputFormat::Csv => {
            writeln!(out, "n,energy,continuum_threshold,bound_count")?;
            for lvl in &results.levels {
                writeln!(
                    out,
                    "{},{},{},{}",
                    lvl.n,
                    fmt_float(lvl.energy),
                    fmt_float(results.continuum_threshold),
                    results.bound_count
                )?;
            }
        }
        OutputFormat::Json => write_json(spec, results, out)?,
    }
    Ok(())
}

fn cmd_potential<W: Write>(
    spec: &WellSpec,
    range: &RangeArgs,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), Error> {
    let xs = sample_range(spec, range)?;
    let well = spec.as_well();
    let rows: Vec<PotentialRow> = xs
        .iter()
        .map(|&x| PotentialRow {
            x,
            v_eff: finite_or_none(well.potential(x)),
            mass: finite_or_none(well.mass(x)),
        })
        .collect();
    match format {
        OutputFormat::Csv => {
            writeln!(out, "x,v_eff,mass")?;
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{}",
                    fmt_float(row.x),
                    row.v_eff.map_or_else(|| "inf".to_string(), fmt_float),
                    row.mass.map_or_else(|| "inf".to_string(), fmt_float),
                )?;
            }
        }
        OutputFormat::Json => write_json(spec, PotentialResults { rows }, out)?,
    }
    Ok(())
}

fn cmd_wavefunctions<W: Write>(
    spec: &WellSpec,
    levels: Option<&[usize]>,
    range: &RangeArgs,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), Error> {
    let well = spec.as_well();
    let bound = well.bound_count();
    let levels: Vec<usize> = match levels {
        Some(ls) => {
            for &n in ls {
                if n >= bound {
                    return Err(Error::LevelOutOfRange { n, bound_count: bound });
                }
            }
            ls.to_vec()
        }
        None => (0..bound).collect(),
    };
    let xs = sample_range(spec, range)?;
    let wall = well.wall();
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let mut psi = Vec::with_capacity(levels.len());
        for &n in &levels {
            // the wavefunction vanishes at and beyond the wall
            let v = if x <= wall { 0.0 } else { well.psi(n, x)? };
            psi.push(v);
        }
        rows.push(WavefunctionRow { x, psi });
    }
    match format {
        OutputFormat::Csv => {
            let header: Vec<String> = levels.iter().map(|n| format!("psi_{n}")).collect();
            writeln!(out, "x,{}", header.join(","))?;
            for row in &rows {
                let values: Vec<String> = row.psi.iter().map(|&v| fmt_float(v)).collect();
                writeln!(out, "{},{}", fmt_float(row.x), values.join(","))?;
            }
        }
        OutputFormat::Json => write_json(spec, WavefunctionResults { levels, rows }, out)?,
    }
    Ok(())
}

fn cmd_verify<W: Write, E: Write>(
    spec: &WellSpec,
    k: Option<usize>,
    delta: Option<f64>,
    x_max: Option<f64>,
    n_points: Option<usize>,
    out: &mut W,
    err: &mut E,
) -> Result<i32, Error> {
    let well = spec.as_well();
    let bound = well.bound_count();
    let k = k.unwrap_or(bound);
    if k == 0 || k > bound {
        return Err(Error::InvalidParameter(format!(
            "k exceeds bound_count={bound}"
        )));
    }
    let config = SolverConfig::auto_with(well, k, delta, x_max, n_points)?;
    let report: VerificationReport = verify_model(well, &config, k)?;
    let all_pass = report.all_pass;
    write_json(spec, report, out)?;
    if all_pass {
        Ok(0)
    } else {
        writeln!(err, "verification failed for at least one level")?;
        Ok(1)
    }
}

fn write_json<R: Serialize, W: Write>(
    spec: &WellSpec,
    results: R,
    out: &mut W,
) -> Result<(), Error> {
    let report = Report {
        well: spec.name(),
        params: spec.params(),
        results,
    };
    let rendered = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::InvalidParameter(format!("serialization failed: {e}")))?;
    writeln!(out, "{rendered}")?;
    Ok(())
}
