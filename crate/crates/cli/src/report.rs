//! Serialization of the analysis document.
//!
//! Keys are emitted in sorted order and every float is written with 12
//! significant digits, so the bytes depend only on the computed values.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use taiji_core::analysis::{AreaReport, ExtremaReport};
use taiji_core::curve::Landmarks;
use taiji_core::numfmt::significant;
use taiji_core::verify::CheckResult;
use taiji_core::Point2;

/// Significant digits for every number in CSV and JSON output.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct PointDoc {
    pub x: f64,
    pub y: f64,
}

impl From<Point2> for PointDoc {
    fn from(p: Point2) -> Self {
        PointDoc { x: p.x, y: p.y }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LandmarksDoc {
    pub x_max: f64,
    pub x_min: f64,
    pub y_max: f64,
    pub y_min: f64,
    pub eye_left: PointDoc,
    pub eye_right: PointDoc,
}

impl From<Landmarks> for LandmarksDoc {
    fn from(l: Landmarks) -> Self {
        LandmarksDoc {
            x_max: l.x_max,
            x_min: l.x_min,
            y_max: l.y_max,
            y_min: l.y_min,
            eye_left: l.eye_left.into(),
            eye_right: l.eye_right.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AreasDoc {
    pub area_below_curve_in_disk: f64,
    pub area_above_curve_in_disk: f64,
    pub disk_area: f64,
    pub integral_of_curve_over_unit_interval: f64,
    pub quadrature_error_estimate: f64,
}

impl From<AreaReport> for AreasDoc {
    fn from(a: AreaReport) -> Self {
        AreasDoc {
            area_below_curve_in_disk: a.area_below_curve_in_disk,
            area_above_curve_in_disk: a.area_above_curve_in_disk,
            disk_area: a.disk_area,
            integral_of_curve_over_unit_interval: a.integral_of_curve_over_unit_interval,
            quadrature_error_estimate: a.quadrature_error_estimate,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremaDoc {
    pub x_at_max: f64,
    pub y_at_max: f64,
    pub x_at_min: f64,
    pub y_at_min: f64,
    pub residual: f64,
}

impl From<ExtremaReport> for ExtremaDoc {
    fn from(e: ExtremaReport) -> Self {
        ExtremaDoc {
            x_at_max: e.x_at_max,
            y_at_max: e.y_at_max,
            x_at_min: e.x_at_min,
            y_at_min: e.y_at_min,
            residual: e.residual,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheckDoc {
    pub name: String,
    pub max_abs_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl From<&CheckResult> for IdentityCheckDoc {
    fn from(c: &CheckResult) -> Self {
        IdentityCheckDoc {
            name: c.name.to_string(),
            max_abs_residual: c.max_abs_residual,
            tolerance: c.tolerance,
            passed: c.passed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisDocument {
    pub landmarks: LandmarksDoc,
    pub areas: AreasDoc,
    pub extrema: ExtremaDoc,
    pub identity_checks: Vec<IdentityCheckDoc>,
}

impl AnalysisDocument {
    pub fn all_passed(&self) -> bool {
        self.identity_checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON, sorted keys, trailing newline.
    pub fn to_json(&self) -> serde_json::Result<Vec<u8>> {
        // Going through `Value` sorts object keys.
        let value = serde_json::to_value(self)?;
        let mut out = Vec::new();
        let mut ser =
            serde_json::Serializer::with_formatter(&mut out, SignificantFormatter::default());
        value.serialize(&mut ser)?;
        out.push(b'\n');
        Ok(out)
    }
}

/// Pretty-printing formatter that writes floats as `%.12g`.
#[derive(Default)]
struct SignificantFormatter {
    pretty: PrettyFormatter<'static>,
}

impl Formatter for SignificantFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(significant(value, SIGNIFICANT_DIGITS).as_bytes())
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.pretty.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.pretty.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object_value(writer)
    }
}
