//! Command-line front-end: closed-form amplitudes, coefficient sweeps,
//! probability-current fields, compact-mode spectra, the square-barrier
//! convergence study, and radius inference, as CSV/JSON for plotting and
//! pipelines.
//!
//! Exit codes: 0 success, 1 domain error (a validated quantity was
//! rejected), 2 usage error (bad flags, malformed values, unreadable
//! files). Identical flags always produce byte-identical data output.

mod output;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use kkscatter::currents::{CurrentField, CurrentPart, SurfacePoint, surface_grid};
use kkscatter::inference::{MeasuredLevel, TorusLevel, assign_modes, fit_radius, fit_torus_radii};
use kkscatter::scattering::{coefficients, sweep_coefficients};
use kkscatter::spectrum::{Channel, axial_wavenumber, enumerate_levels};
use kkscatter::{CompactGeometry64, Complex64, PhysicalConfig64, ScatteringSetup64};

use output::{RunManifest, complex_json, float, write_atomic};

#[derive(Parser)]
#[command(
    name = "kkscatter",
    version,
    about = "Delta-potential scattering with compact extra dimensions"
)]
struct Cli {
    /// Reduced Planck constant (default 1; overrides the config file).
    #[arg(long, global = true, allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// Particle mass (default 1; overrides the config file).
    #[arg(long, global = true, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// JSON config file: { "hbar": ..., "mass": ..., "radii": [...] }.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print reflection/transmission amplitudes and coefficients as JSON.
    Amplitudes {
        /// Delta-potential strength (may be negative).
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        /// Axial wavenumber of the incident beam.
        #[arg(long, allow_negative_numbers = true)]
        k1: f64,
        /// Compactification radius (overrides the config file).
        #[arg(long, allow_negative_numbers = true)]
        radius: Option<f64>,
    },
    /// Sweep the coefficients over a wavenumber range and write CSV.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long = "k1-min", allow_negative_numbers = true)]
        k1_min: f64,
        #[arg(long = "k1-max", allow_negative_numbers = true)]
        k1_max: f64,
        /// Number of grid points (>= 1); 1 evaluates at k1-min only.
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        radius: Option<f64>,
    },
    /// Evaluate the probability-current fields on a surface grid and write CSV.
    Currents {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        k1: f64,
        /// Angular mode number.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Cosine angular amplitude as "re:im".
        #[arg(long = "F1", allow_hyphen_values = true)]
        f1: String,
        /// Sine angular amplitude as "re:im".
        #[arg(long = "G1", allow_hyphen_values = true)]
        g1: String,
        /// Incident amplitude as "re:im" (field scaling only).
        #[arg(long = "A1", default_value = "1:0", allow_hyphen_values = true)]
        a1: String,
        /// Grid as "NPHIxNZ".
        #[arg(long)]
        grid: String,
        /// Axial range as "zmin:zmax".
        #[arg(long, allow_hyphen_values = true)]
        zrange: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        radius: Option<f64>,
    },
    /// Enumerate the compact-mode spectrum up to an energy cutoff as CSV.
    Spectrum {
        /// Energy cutoff; also the beam energy for channel classification.
        #[arg(long, allow_negative_numbers = true)]
        emax: f64,
        /// Comma-separated compactification radii (overrides the config file).
        #[arg(long)]
        radii: Option<String>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the square-barrier convergence study toward the delta potential.
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        k1: f64,
        /// Comma-separated, strictly decreasing barrier widths.
        #[arg(long)]
        widths: String,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover compactification radii from measured energy offsets (JSON).
    InferRadius {
        /// Input JSON: { "offsets": [...], "sigmas": [...]?, "modes": [[...]...]? }.
        #[arg(long)]
        input: PathBuf,
        /// Relative tolerance for the mode-assignment ladder check.
        #[arg(long, default_value_t = 0.05)]
        tol_rel: f64,
    },
}

#[derive(Debug)]
enum CliError {
    /// Malformed flags, values, or unreadable files; exit 2.
    Usage(String),
    /// A validated physical quantity was rejected; exit 1.
    Domain(kkscatter::Error),
}

impl From<kkscatter::Error> for CliError {
    fn from(err: kkscatter::Error) -> Self {
        CliError::Domain(err)
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

type CliResult<T> = Result<T, CliError>;

#[derive(Deserialize)]
struct ConfigFile {
    hbar: f64,
    mass: f64,
    radii: Vec<f64>,
}

/// Effective settings after merging flags over the optional config file.
struct Settings {
    config: PhysicalConfig64,
    radii: Option<Vec<f64>>,
}

impl Settings {
    fn resolve(cli: &Cli) -> CliResult<Self> {
        let file: Option<ConfigFile> = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
                Some(
                    serde_json::from_str(&text)
                        .map_err(|e| usage(format!("malformed config {}: {e}", path.display())))?,
                )
            }
            None => None,
        };
        let hbar = cli.hbar.or(file.as_ref().map(|f| f.hbar)).unwrap_or(1.0);
        let mass = cli.mass.or(file.as_ref().map(|f| f.mass)).unwrap_or(1.0);
        Ok(Settings {
            config: PhysicalConfig64::new(hbar, mass)?,
            radii: file.map(|f| f.radii),
        })
    }

    /// Cylinder geometry for the scattering commands.
    fn cylinder(&self, radius_flag: Option<f64>) -> CliResult<CompactGeometry64> {
        let radii = match (radius_flag, &self.radii) {
            (Some(radius), _) => vec![radius],
            (None, Some(radii)) => radii.clone(),
            (None, None) => vec![1.0],
        };
        Ok(CompactGeometry64::new(radii)?)
    }

    /// Torus geometry for the spectrum command.
    fn torus(&self, radii_flag: &Option<String>) -> CliResult<CompactGeometry64> {
        let radii = match (radii_flag, &self.radii) {
            (Some(list), _) => parse_float_list(list, "radii")?,
            (None, Some(radii)) => radii.clone(),
            (None, None) => vec![1.0],
        };
        Ok(CompactGeometry64::new(radii)?)
    }
}

fn parse_complex(text: &str, flag: &str) -> CliResult<Complex64> {
    let (re, im) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("--{flag} expects \"re:im\", got \"{text}\"")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("--{flag}: \"{s}\" is not a number")))
    };
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

fn parse_float_list(text: &str, flag: &str) -> CliResult<Vec<f64>> {
    if text.trim().is_empty() {
        return Err(usage(format!("--{flag} must not be empty")));
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("--{flag}: \"{s}\" is not a number")))
        })
        .collect()
}

fn parse_grid(text: &str) -> CliResult<(usize, usize)> {
    let err = || usage(format!("--grid expects \"NPHIxNZ\", got \"{text}\""));
    let (n_phi, n_z) = text.split_once(['x', 'X']).ok_or_else(err)?;
    let n_phi: usize = n_phi.trim().parse().map_err(|_| err())?;
    let n_z: usize = n_z.trim().parse().map_err(|_| err())?;
    if n_phi == 0 || n_z == 0 {
        return Err(usage("--grid dimensions must be at least 1".to_string()));
    }
    Ok((n_phi, n_z))
}

fn parse_zrange(text: &str) -> CliResult<(f64, f64)> {
    let err = || usage(format!("--zrange expects \"zmin:zmax\", got \"{text}\""));
    // Split at the last ':' so negative zmin keeps its sign.
    let (z_min, z_max) = text.rsplit_once(':').ok_or_else(err)?;
    let z_min: f64 = z_min.trim().parse().map_err(|_| err())?;
    let z_max: f64 = z_max.trim().parse().map_err(|_| err())?;
    if z_min.is_nan() || z_max.is_nan() || z_min > z_max {
        return Err(usage(format!("--zrange: {z_min} exceeds {z_max}")));
    }
    Ok((z_min, z_max))
}

fn emit(out: Option<&Path>, contents: &str, manifest: &RunManifest) -> CliResult<()> {
    match out {
        Some(path) => {
            write_atomic(path, contents)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            manifest
                .write_next_to(path)
                .map_err(|e| usage(format!("cannot write manifest: {e}")))?;
            Ok(())
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let settings = Settings::resolve(cli)?;
    match &cli.command {
        Command::Amplitudes { lambda, k1, radius } => {
            let setup = ScatteringSetup64::new(
                *lambda,
                *k1,
                0,
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                settings.config,
                settings.cylinder(*radius)?,
            )?;
            let amps = coefficients(&setup);
            println!(
                "{{\"r\":{},\"t\":{},\"R1\":{},\"T1\":{}}}",
                complex_json(amps.r().re, amps.r().im),
                complex_json(amps.t().re, amps.t().im),
                float(amps.r1()),
                float(amps.t1()),
            );
            Ok(())
        }
        Command::Sweep {
            lambda,
            k1_min,
            k1_max,
            steps,
            out,
            radius,
        } => {
            if *steps == 0 {
                return Err(usage("--steps must be at least 1"));
            }
            if *steps > 1 && (k1_min.is_nan() || k1_max.is_nan() || k1_max <= k1_min) {
                return Err(usage(format!(
                    "malformed range: k1-min {k1_min} must be below k1-max {k1_max}"
                )));
            }
            let grid: Vec<f64> = (0..*steps)
                .map(|i| {
                    if *steps == 1 {
                        *k1_min
                    } else {
                        k1_min + (k1_max - k1_min) * i as f64 / (*steps - 1) as f64
                    }
                })
                .collect();
            let rows = sweep_coefficients(
                *lambda,
                &grid,
                &settings.config,
                &settings.cylinder(*radius)?,
            )?;
            let mut csv = String::from("k1,E_axial,R1,T1,re_r,im_r,re_t,im_t\n");
            for row in &rows {
                let amps = &row.amplitudes;
                writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{}",
                    float(row.k1),
                    float(row.e_axial),
                    float(amps.r1()),
                    float(amps.t1()),
                    float(amps.r().re),
                    float(amps.r().im),
                    float(amps.t().re),
                    float(amps.t().im),
                )
                .expect("writing to a string cannot fail");
            }
            let mut manifest = RunManifest::new("sweep");
            manifest
                .param("lambda", float(*lambda))
                .param("k1-min", float(*k1_min))
                .param("k1-max", float(*k1_max))
                .param("steps", steps.to_string())
                .param("hbar", float(settings.config.hbar()))
                .param("mass", float(settings.config.mass()));
            emit(Some(out), &csv, &manifest)
        }
        Command::Currents {
            lambda,
            k1,
            n,
            f1,
            g1,
            a1,
            grid,
            zrange,
            out,
            radius,
        } => {
            let f1 = parse_complex(f1, "F1")?;
            let g1 = parse_complex(g1, "G1")?;
            let a1 = parse_complex(a1, "A1")?;
            let (n_phi, n_z) = parse_grid(grid)?;
            let (z_min, z_max) = parse_zrange(zrange)?;
            let setup = ScatteringSetup64::new(
                *lambda,
                *k1,
                *n,
                f1,
                g1,
                settings.config,
                settings.cylinder(*radius)?,
            )?;
            let amps = coefficients(&setup);
            let points = surface_grid(n_phi, n_z, z_min, z_max);
            let left: Vec<SurfacePoint<f64>> =
                points.iter().filter(|p| p.z() < 0.0).copied().collect();
            let right: Vec<SurfacePoint<f64>> =
                points.iter().filter(|p| p.z() > 0.0).copied().collect();

            let mut csv = String::from("part,phi,z,j_phi,j_z\n");
            let mut any = false;
            for (part, region_points) in [
                (CurrentPart::Incident, &left),
                (CurrentPart::Reflected, &left),
                (CurrentPart::Transmitted, &right),
            ] {
                if region_points.is_empty() {
                    continue;
                }
                any = true;
                let field = CurrentField::evaluate(part, region_points, &setup, &amps, a1)?;
                for (point, current) in field.entries() {
                    writeln!(
                        csv,
                        "{},{},{},{},{}",
                        part.name(),
                        float(point.phi()),
                        float(point.z()),
                        float(current.j_phi),
                        float(current.j_z),
                    )
                    .expect("writing to a string cannot fail");
                }
            }
            if !any {
                // Every grid point sits on the potential plane z = 0.
                return Err(CliError::Domain(kkscatter::Error::EmptyGrid));
            }
            let mut manifest = RunManifest::new("currents");
            manifest
                .param("lambda", float(*lambda))
                .param("k1", float(*k1))
                .param("n", n.to_string())
                .param("F1", complex_json(f1.re, f1.im))
                .param("G1", complex_json(g1.re, g1.im))
                .param("A1", complex_json(a1.re, a1.im))
                .param("grid", grid.clone())
                .param("zrange", zrange.clone())
                .param("hbar", float(settings.config.hbar()))
                .param("mass", float(settings.config.mass()))
                .param("radius", float(setup.radius()));
            emit(Some(out), &csv, &manifest)
        }
        Command::Spectrum { emax, radii, out } => {
            let geometry = settings.torus(radii)?;
            let levels = enumerate_levels(*emax, &settings.config, &geometry)?;
            let mut csv = String::from("modes,compact_energy,degeneracy,open,k1_or_kappa\n");
            for level in &levels {
                let channel = axial_wavenumber(*emax, &level.modes, &settings.config, &geometry)?;
                let magnitude = match channel {
                    Channel::Open { k1 } => k1,
                    Channel::Closed { kappa } => kappa,
                };
                let modes = level
                    .modes
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                writeln!(
                    csv,
                    "{},{},{},{},{}",
                    modes,
                    float(level.compact_energy),
                    level.degeneracy,
                    level.open,
                    float(magnitude),
                )
                .expect("writing to a string cannot fail");
            }
            let mut manifest = RunManifest::new("spectrum");
            manifest
                .param("emax", float(*emax))
                .param(
                    "radii",
                    geometry
                        .radii()
                        .iter()
                        .map(|&r| float(r))
                        .collect::<Vec<_>>()
                        .join(","),
                )
                .param("hbar", float(settings.config.hbar()))
                .param("mass", float(settings.config.mass()));
            emit(out.as_deref(), &csv, &manifest)
        }
        Command::Oracle {
            lambda,
            k1,
            widths,
            out,
        } => {
            let widths_list = parse_float_list(widths, "widths")?;
            let rows = kkscatter::barrier::delta_limit_study(
                *k1,
                *lambda,
                &widths_list,
                &settings.config,
            )?;
            let mut csv = String::from("a,V0,R_barrier,T_barrier,R_delta,T_delta,err\n");
            for row in &rows {
                writeln!(
                    csv,
                    "{},{},{},{},{},{},{}",
                    float(row.width),
                    float(row.height),
                    float(row.r_barrier),
                    float(row.t_barrier),
                    float(row.r_delta),
                    float(row.t_delta),
                    float(row.err),
                )
                .expect("writing to a string cannot fail");
            }
            let mut manifest = RunManifest::new("oracle");
            manifest
                .param("lambda", float(*lambda))
                .param("k1", float(*k1))
                .param("widths", widths.clone())
                .param("hbar", float(settings.config.hbar()))
                .param("mass", float(settings.config.mass()));
            emit(out.as_deref(), &csv, &manifest)
        }
        Command::InferRadius { input, tol_rel } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
            let parsed: InferInput = serde_json::from_str(&text)
                .map_err(|e| usage(format!("malformed input {}: {e}", input.display())))?;
            let report = infer_radii(&parsed, *tol_rel, &settings.config)?;
            println!("{report}");
            Ok(())
        }
    }
}

#[derive(Deserialize)]
struct InferInput {
    offsets: Vec<f64>,
    sigmas: Option<Vec<f64>>,
    modes: Option<Vec<Vec<i64>>>,
}

fn infer_radii(input: &InferInput, tol_rel: f64, config: &PhysicalConfig64) -> CliResult<String> {
    if let Some(sigmas) = &input.sigmas
        && sigmas.len() != input.offsets.len()
    {
        return Err(usage("sigmas and offsets must have the same length"));
    }
    let sigma_at = |i: usize| input.sigmas.as_ref().map_or(0.0, |s| s[i]);

    let (radii, rms, assignment): (Vec<f64>, f64, Vec<Vec<i64>>) = match &input.modes {
        Some(modes) => {
            if modes.len() != input.offsets.len() {
                return Err(usage("modes and offsets must have the same length"));
            }
            let dim = modes.first().map_or(0, |m| m.len());
            let levels: Vec<TorusLevel<f64>> = modes
                .iter()
                .zip(&input.offsets)
                .enumerate()
                .map(|(i, (m, &de))| TorusLevel::new(m.clone(), de, sigma_at(i)))
                .collect();
            let fit = fit_torus_radii(&levels, config, dim)?;
            (fit.radii().to_vec(), fit.rms_residual(), modes.clone())
        }
        None => {
            let assigned = assign_modes(&input.offsets, tol_rel)?;
            let levels: Vec<MeasuredLevel<f64>> = assigned
                .iter()
                .enumerate()
                .map(|(i, level)| MeasuredLevel::new(level.n, level.delta_e, sigma_at(i)))
                .collect();
            let fit = fit_radius(&levels, config)?;
            let assignment = assigned.iter().map(|l| vec![l.n as i64]).collect();
            (vec![fit.radius()], fit.rms_residual(), assignment)
        }
    };

    let radii_json = radii
        .iter()
        .map(|&r| float(r))
        .collect::<Vec<_>>()
        .join(",");
    let assignment_json = assignment
        .iter()
        .map(|modes| {
            format!(
                "[{}]",
                modes
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(",");
    Ok(format!(
        "{{\"radii\":[{}],\"rms_residual\":{},\"assignment\":[{}]}}",
        radii_json,
        float(rms),
        assignment_json,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
