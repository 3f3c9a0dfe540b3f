//! `hkorbit` command-line front end. Every subcommand reads JSON from a file
//! argument or stdin and writes JSON to stdout, except `figure` (SVG) and
//! `verify` (a text table).
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! malformed input or a geometry error, with a JSON error object on stderr.

pub mod figure;
pub mod json;
pub mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::hk::{induced_j, kahler_potential, MetricC, StructureConfig, DC_CONVENTION, DEFAULT_FD_STEP};
use crate::lie::ALPHA_CURV;
use crate::mostow::mostow_decompose;
use crate::orbit::{disc_to_fiber, fiber_to_disc, phi, phi_inv, project_pi, DiscPoint, OrbitPoint, TangentVec};

use figure::{emit_svg, FigureSpec};
use json::{
    complex_from_json, complex_to_json, matrix_from_json, matrix_to_json, real_matrix_to_json, ErrorBody,
    ErrorObject, JsonComplex, JsonMatrix,
};
use verify::{all_passed, render_table, run_suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(name = "hkorbit", version, about = "Hyperkähler geometry of the complex adjoint orbit of SL(2,C)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Prefactor of the Kähler potential K = alpha·Re<y, pi(y)>.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = 2.0)]
    pub alpha_potential: f64,
    /// Metric constant c, or `auto` to calibrate it at x.
    #[arg(long, global = true, allow_negative_numbers = true, default_value = "auto")]
    pub metric_c: String,
    /// Step of the central differences behind the pushforward of pi.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = DEFAULT_FD_STEP)]
    pub fd_step: f64,
    /// Seed of the random sampling in `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Multiplier applied to every upper tolerance in `verify`.
    #[arg(long, global = true, allow_negative_numbers = true, default_value_t = 1.0)]
    pub tolerance_scale: f64,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// JSON input file; stdin when omitted.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// SL(2,C) matrix -> Mostow factors k, f, e with beta and residuals.
    Decompose(InputArg),
    /// Orbit point -> its projection pi(y) onto the compact orbit.
    Project(InputArg),
    /// {"z", "generator"} -> the orbit point phi(z, X^generator).
    Phi(InputArg),
    /// Orbit point -> {"z", "generator", "value"} with phi(z, v) = y.
    PhiInv(InputArg),
    /// {"y": fiber point} -> {"z": disc point}, or {"z"} -> {"y"}.
    Disc(InputArg),
    /// Orbit point -> Kähler potential and the constants in use.
    Potential(InputArg),
    /// List of disc points -> frames P and induced structures J.
    Jfield(InputArg),
    /// SVG ellipse field of the induced structure.
    Figure {
        /// FigureSpec JSON; defaults when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Run the invariant suite and print a pass/fail table.
    Verify,
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { kind: e.code(), message: e.to_string() }
    }
}

fn failure(kind: &'static str, message: impl Into<String>) -> Failure {
    Failure { kind, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn config(g: &GlobalOpts) -> CliResult<StructureConfig<f64>> {
    let c = match g.metric_c.trim() {
        "auto" => MetricC::Auto,
        s => MetricC::Fixed(
            s.parse::<f64>().map_err(|_| failure("invalid_config", format!("--metric-c expects a real or `auto`, got {s:?}")))?,
        ),
    };
    if !(g.tolerance_scale.is_finite() && g.tolerance_scale > 0.0) {
        return Err(failure("invalid_config", format!("--tolerance-scale must be > 0, got {}", g.tolerance_scale)));
    }
    Ok(StructureConfig::new(g.alpha_potential, c, g.fd_step)?)
}

fn read_input(arg: &InputArg, stdin: &mut dyn Read) -> CliResult<String> {
    match &arg.input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| failure("io", format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| failure("io", format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| failure("malformed_json", e.to_string()))
}

fn orbit_point(m: &JsonMatrix) -> CliResult<OrbitPoint<f64>> {
    Ok(OrbitPoint::new(matrix_from_json(m)?)?)
}

fn disc_point(z: &JsonComplex) -> CliResult<DiscPoint<f64>> {
    Ok(DiscPoint::new(complex_from_json(z))?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PhiInput {
    z: JsonMatrix,
    generator: JsonMatrix,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DiscInput {
    Fiber { y: JsonMatrix },
    Disc { z: JsonComplex },
}

#[derive(Serialize)]
struct JFrameOut {
    z: JsonComplex,
    p_matrix: [[f64; 2]; 2],
    j_matrix: [[f64; 2]; 2],
}

fn decompose(text: &str) -> CliResult<Value> {
    let g = matrix_from_json(&parse::<JsonMatrix>(text)?)?;
    let m = mostow_decompose(&g)?;
    Ok(json!({
        "k": matrix_to_json(&m.k),
        "f": matrix_to_json(&m.f),
        "e": matrix_to_json(&m.e),
        "beta": complex_to_json(m.beta),
        "mostow_alpha": m.mostow_alpha,
        "residuals": {
            "reconstruction": m.reconstruction_residual(&g),
            "gram": m.gram_residual(&g),
            "unitarity": m.unitarity_residual(),
        },
    }))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<i32> {
    let cfg = config(&cli.global)?;
    let value = match &cli.command {
        Command::Decompose(a) => decompose(&read_input(a, stdin)?)?,
        Command::Project(a) => {
            let y = orbit_point(&parse(&read_input(a, stdin)?)?)?;
            json!({ "pi": matrix_to_json(project_pi(&y)?.value()) })
        }
        Command::Phi(a) => {
            let input: PhiInput = parse(&read_input(a, stdin)?)?;
            let z = orbit_point(&input.z)?;
            let v = TangentVec::new(z, matrix_from_json(&input.generator)?);
            json!({ "y": matrix_to_json(phi(&z, &v)?.value()) })
        }
        Command::PhiInv(a) => {
            let y = orbit_point(&parse(&read_input(a, stdin)?)?)?;
            let (z, v) = phi_inv(&y)?;
            json!({
                "z": matrix_to_json(z.value()),
                "generator": matrix_to_json(&v.generator),
                "value": matrix_to_json(&v.value),
            })
        }
        Command::Disc(a) => match parse::<DiscInput>(&read_input(a, stdin)?)? {
            DiscInput::Fiber { y } => json!({ "z": complex_to_json(fiber_to_disc(&orbit_point(&y)?)?.z()) }),
            DiscInput::Disc { z } => json!({ "y": matrix_to_json(disc_to_fiber(&disc_point(&z)?).value()) }),
        },
        Command::Potential(a) => {
            let y = orbit_point(&parse(&read_input(a, stdin)?)?)?;
            json!({
                "k": kahler_potential(&y, &cfg)?,
                "alpha_potential": cfg.alpha_potential(),
                "alpha_curv": ALPHA_CURV,
                "metric_c": cfg.metric_c(),
                "metric_c_calibrated": cfg.metric_c_calibrated(),
                "dc_convention": DC_CONVENTION,
            })
        }
        Command::Jfield(a) => {
            let zs: Vec<JsonComplex> = parse(&read_input(a, stdin)?)?;
            let frames = zs
                .iter()
                .map(|z| {
                    let f = induced_j(&disc_point(z)?);
                    Ok(JFrameOut {
                        z: complex_to_json(f.z.z()),
                        p_matrix: real_matrix_to_json(&f.p_matrix),
                        j_matrix: real_matrix_to_json(&f.j_matrix),
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            serde_json::to_value(frames).expect("finite frames serialize")
        }
        Command::Figure { spec } => {
            let spec = match spec {
                Some(p) => parse::<FigureSpec>(
                    &std::fs::read_to_string(p).map_err(|e| failure("io", format!("{}: {e}", p.display())))?,
                )?,
                None => FigureSpec::default(),
            };
            spec.validate()?;
            write_out(stdout, &emit_svg(&spec.glyphs(), &spec))?;
            return Ok(0);
        }
        Command::Verify => {
            let results = run_suite(SuiteOptions {
                seed: cli.global.seed,
                tolerance_scale: cli.global.tolerance_scale,
                config: cfg,
            });
            write_out(stdout, &render_table(&results))?;
            return Ok(if all_passed(&results) { 0 } else { 1 });
        }
    };
    let mut text = serde_json::to_string_pretty(&value)
        .map_err(|e| failure("non_finite", format!("output is not representable in JSON: {e}")))?;
    text.push('\n');
    write_out(stdout, &text)?;
    Ok(0)
}

fn write_out(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes()).map_err(|e| failure("io", e.to_string()))
}

fn report(stderr: &mut dyn Write, f: Failure) -> i32 {
    let obj = ErrorObject { error: ErrorBody { kind: f.kind.to_string(), message: f.message } };
    let _ = writeln!(stderr, "{}", serde_json::to_string(&obj).expect("error object serializes"));
    2
}

/// Parses `args` (program name first) and runs the subcommand; returns the
/// process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            return report(stderr, failure("usage", e.to_string().trim_end()));
        }
    };
    match dispatch(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(f) => report(stderr, f),
    }
}
