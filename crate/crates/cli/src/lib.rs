//! Command implementations behind the `taiji` binary.
//!
//! Exit codes: 0 success, 2 argument or domain error, 3 I/O error,
//! 4 verification failure.

pub mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use taiji_core::analysis::{find_extrema, region_areas};
use taiji_core::curve::{
    chord_at, landmarks, s_curve, s_curve_derivative, s_curve_lever, sample_curve, StandardCurve,
};
use taiji_core::numfmt::{fixed, significant};
use taiji_core::render::{render_construction, render_diagram, DiagramSpec, DEFAULT_EYE_RADIUS};
use taiji_core::verify::{identity_checks, run_checks, CheckResult};
use taiji_core::{clamp_unit, Execution, TaijiError, Tolerance};
use thiserror::Error;

use crate::report::{AnalysisDocument, SIGNIFICANT_DIGITS};

#[derive(Debug, Parser)]
#[command(
    name = "taiji",
    version,
    about = "Compute, verify and render the standard yin-yang diagram"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the S-curve at one abscissa.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Write `n` uniform curve samples as CSV.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the JSON analysis document.
    Analyze {
        #[arg(long)]
        out: PathBuf,
    },
    /// Render the diagram (or the construction figure) as SVG.
    Render {
        /// Render the line x + y = 1 beside the S-curve instead of the diagram.
        #[arg(long)]
        construction: bool,
        #[arg(long, default_value_t = 512)]
        size: u32,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Fish-eye radius in unit coordinates [default: 1/24].
        #[arg(long, allow_negative_numbers = true)]
        eye_radius: Option<f64>,
        /// Fill the fish above the S-curve dark instead of the one below.
        #[arg(long)]
        swap_colors: bool,
        #[arg(long)]
        square: bool,
        #[arg(long)]
        line: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every check; exit 4 if any fails.
    Verify,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] TaijiError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("stdout: {0}")]
    Stdout(io::Error),
    #[error("{0} check(s) failed")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Io { .. } | CliError::Stdout(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

pub fn run(cli: Cli, stdout: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Eval { x } => cmd_eval(x, stdout),
        Command::Sample { n, out } => cmd_sample(n, &out),
        Command::Analyze { out } => cmd_analyze(&out),
        Command::Render {
            construction,
            size,
            samples,
            eye_radius,
            swap_colors,
            square,
            line,
            out,
        } => {
            let spec = DiagramSpec {
                canvas_px: size,
                samples,
                eye_radius: eye_radius.unwrap_or(DEFAULT_EYE_RADIUS),
                dark_below: !swap_colors,
                include_square: square || construction,
                include_line: line || construction,
            };
            cmd_render(&spec, construction, &out)
        }
        Command::Verify => cmd_verify(stdout),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn cmd_eval(x: f64, stdout: &mut dyn Write) -> CliResult {
    let x = clamp_unit(x, Tolerance::default())?;
    let chord = chord_at(x);
    let derivative = match s_curve_derivative(x) {
        Ok(d) => fixed(d, 12),
        Err(TaijiError::EndpointSingularity(_)) => "undefined at endpoint".to_string(),
        Err(e) => return Err(e.into()),
    };
    let text = format!(
        "x={}\ny={}\ny_lever={}\ny1={}\ny2={}\nderivative={}\n",
        fixed(x.get(), 12),
        fixed(s_curve(x).y, 12),
        fixed(s_curve_lever(x).y, 12),
        fixed(chord.y1, 12),
        fixed(chord.y2, 12),
        derivative,
    );
    stdout.write_all(text.as_bytes()).map_err(CliError::Stdout)
}

/// CSV bytes for `n` uniform samples: header `x,y,y1,y2`, LF endings.
pub fn sample_csv(n: usize) -> CliResult<Vec<u8>> {
    let samples = sample_curve(n)?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let fmt = |v: f64| significant(v, SIGNIFICANT_DIGITS);
    let io_err = |e: csv::Error| CliError::Stdout(io::Error::other(e));
    w.write_record(["x", "y", "y1", "y2"]).map_err(io_err)?;
    for s in &samples {
        let c = chord_at(s.x);
        w.write_record([fmt(s.x.get()), fmt(s.y), fmt(c.y1), fmt(c.y2)])
            .map_err(io_err)?;
    }
    w.into_inner()
        .map_err(|e| CliError::Stdout(io::Error::other(e.to_string())))
}

pub fn cmd_sample(n: usize, out: &Path) -> CliResult {
    let bytes = sample_csv(n)?;
    write_file(out, &bytes)
}

pub fn analysis_document() -> CliResult<AnalysisDocument> {
    let tol = Tolerance::default();
    // The analysis kernels only fail if the library itself is broken.
    let as_failure = |_: TaijiError| CliError::Verification(1);
    let areas = region_areas(tol).map_err(as_failure)?;
    let extrema = find_extrema(tol).map_err(as_failure)?;
    let checks = identity_checks(&StandardCurve, Execution::default());
    Ok(AnalysisDocument {
        landmarks: landmarks().into(),
        areas: areas.into(),
        extrema: extrema.into(),
        identity_checks: checks.iter().map(Into::into).collect(),
    })
}

pub fn cmd_analyze(out: &Path) -> CliResult {
    let doc = analysis_document()?;
    let bytes = doc
        .to_json()
        .map_err(|e| CliError::Stdout(io::Error::other(e)))?;
    write_file(out, &bytes)?;
    let failed = doc.identity_checks.iter().filter(|c| !c.passed).count();
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

pub fn cmd_render(spec: &DiagramSpec, construction: bool, out: &Path) -> CliResult {
    let bytes = if construction {
        render_construction(spec)?
    } else {
        render_diagram(spec)?
    };
    write_file(out, &bytes)
}

/// One report line per check.
pub fn format_check(c: &CheckResult) -> String {
    let status = if c.passed { "PASS" } else { "FAIL" };
    let criterion = c
        .criterion
        .map(|n| format!("  [criterion {n}]"))
        .unwrap_or_default();
    format!(
        "{status}  {:<30} residual={:<20} tolerance={}{criterion}",
        c.name,
        significant(c.max_abs_residual, 6),
        significant(c.tolerance, 6),
    )
}

pub fn cmd_verify(stdout: &mut dyn Write) -> CliResult {
    let results = run_checks(&StandardCurve, Execution::default());
    let mut text = String::new();
    for r in &results {
        text.push_str(&format_check(r));
        text.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    text.push_str(&format!(
        "{} of {} checks passed\n",
        results.len() - failed,
        results.len()
    ));
    stdout
        .write_all(text.as_bytes())
        .map_err(CliError::Stdout)?;
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}
