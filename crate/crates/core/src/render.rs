//! Deterministic SVG output for the double-fish diagram and for the
//! construction figure (the line `x + y = 1` next to the S-curve).
//!
//! Unit coordinates map to pixels by `px = x·size`, `py = (1 - y)·size`.
//! Every geometric number is written with exactly six decimals; element
//! order is fixed, so equal specs give byte-identical documents.

use std::fmt::Write as _;

use crate::curve::{landmarks, s_curve, uniform_abscissa};
use crate::error::{Result, TaijiError};
use crate::numfmt::fixed;
use crate::primitives::{Point2, UnitValue};

pub const DARK: &str = "#000000";
pub const LIGHT: &str = "#ffffff";
pub const STROKE: &str = "#000000";
const LINE_STROKE: &str = "#808080";

pub const MIN_CANVAS_PX: u32 = 64;
pub const MIN_SAMPLES: usize = 64;
pub const DEFAULT_EYE_RADIUS: f64 = 1.0 / 24.0;

/// Rendering parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramSpec {
    pub canvas_px: u32,
    pub samples: usize,
    /// In unit coordinates, `0 < eye_radius < 0.25`.
    pub eye_radius: f64,
    /// Fill the region below the S-curve dark (it contains the left eye point).
    pub dark_below: bool,
    pub include_square: bool,
    pub include_line: bool,
}

impl Default for DiagramSpec {
    fn default() -> Self {
        DiagramSpec {
            canvas_px: 512,
            samples: 256,
            eye_radius: DEFAULT_EYE_RADIUS,
            dark_below: true,
            include_square: false,
            include_line: false,
        }
    }
}

impl DiagramSpec {
    /// Defaults for the construction figure.
    pub fn construction() -> Self {
        DiagramSpec {
            include_square: true,
            include_line: true,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.canvas_px < MIN_CANVAS_PX {
            return Err(TaijiError::InvalidSpec(format!(
                "canvas_px must be at least {MIN_CANVAS_PX}, got {}",
                self.canvas_px
            )));
        }
        if self.samples < MIN_SAMPLES {
            return Err(TaijiError::InvalidSpec(format!(
                "samples must be at least {MIN_SAMPLES}, got {}",
                self.samples
            )));
        }
        if !(self.eye_radius > 0.0 && self.eye_radius < 0.25) {
            return Err(TaijiError::InvalidSpec(format!(
                "eye_radius must lie in (0, 0.25), got {}",
                self.eye_radius
            )));
        }
        Ok(())
    }
}

/// S-curve vertices for a fish outline: the uniform samples with both
/// extrema spliced in, ordered from `(0, ½)` to `(1, ½)`.
pub fn fish_curve_points(samples: usize) -> Vec<Point2> {
    let l = landmarks();
    let mut xs: Vec<f64> = (0..samples)
        .map(|i| uniform_abscissa(i, samples).get())
        .collect();
    xs.extend([l.x_max, l.x_min]);
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.into_iter()
        .map(|x| s_curve(UnitValue::new(x).expect("in [0, 1]")).point())
        .collect()
}

struct Canvas {
    size: f64,
}

impl Canvas {
    fn x(&self, x: f64) -> String {
        fixed(x * self.size, 6)
    }

    fn y(&self, y: f64) -> String {
        fixed((1.0 - y) * self.size, 6)
    }

    fn len(&self, v: f64) -> String {
        fixed(v * self.size, 6)
    }

    fn header(&self, out: &mut String, px: u32) {
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{px}\" height=\"{px}\" viewBox=\"0 0 {px} {px}\">"
        );
    }

    fn square(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "  <rect id=\"square\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{STROKE}\" stroke-width=\"{}\"/>",
            self.x(0.0),
            self.y(1.0),
            self.len(1.0),
            self.len(1.0),
            fixed(1.0, 6),
        );
    }

    fn circle(&self, out: &mut String, id: &str, c: Point2, r: f64, fill: &str) {
        let _ = writeln!(
            out,
            "  <circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"{STROKE}\" stroke-width=\"{}\"/>",
            self.x(c.x),
            self.y(c.y),
            self.len(r),
            fixed(1.0, 6),
        );
    }

    fn line(&self, out: &mut String, from: Point2, to: Point2) {
        let _ = writeln!(
            out,
            "  <line id=\"line\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{LINE_STROKE}\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
            self.x(from.x),
            self.y(from.y),
            self.x(to.x),
            self.y(to.y),
            fixed(1.0, 6),
            fixed(6.0, 6),
            fixed(4.0, 6),
        );
    }

    /// Closed fish outline: S-curve left to right, then the semicircle back.
    fn fish(&self, out: &mut String, id: &str, curve: &[Point2], lower: bool, fill: &str) {
        let mut d = String::new();
        for (i, p) in curve.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd} {} {} ", self.x(p.x), self.y(p.y));
        }
        let start = curve[0];
        // Screen y points down, so the lower semicircle is the positive sweep.
        let sweep = u8::from(lower);
        let r = self.len(0.5);
        let _ = write!(
            d,
            "A {r} {r} 0 0 {sweep} {} {} Z",
            self.x(start.x),
            self.y(start.y)
        );
        let _ = writeln!(
            out,
            "  <path id=\"{id}\" d=\"{d}\" fill=\"{fill}\" stroke=\"{STROKE}\" stroke-width=\"{}\"/>",
            fixed(1.0, 6),
        );
    }
}

const CENTER: Point2 = Point2 { x: 0.5, y: 0.5 };

/// The standard diagram: optional square, circle, dark fish, light fish,
/// both eyes, optional `x + y = 1` segment.
pub fn render_diagram(spec: &DiagramSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    let canvas = Canvas {
        size: f64::from(spec.canvas_px),
    };
    let curve = fish_curve_points(spec.samples);
    let l = landmarks();
    let mut out = String::new();
    canvas.header(&mut out, spec.canvas_px);
    if spec.include_square {
        canvas.square(&mut out);
    }
    canvas.circle(&mut out, "circle", CENTER, 0.5, "none");
    canvas.fish(&mut out, "fish-dark", &curve, spec.dark_below, DARK);
    canvas.fish(&mut out, "fish-light", &curve, !spec.dark_below, LIGHT);
    // The left eye sits in the lower fish; each eye takes the other fish's colour.
    let (left_fill, right_fill) = if spec.dark_below {
        (LIGHT, DARK)
    } else {
        (DARK, LIGHT)
    };
    canvas.circle(&mut out, "eye-left", l.eye_left, spec.eye_radius, left_fill);
    canvas.circle(
        &mut out,
        "eye-right",
        l.eye_right,
        spec.eye_radius,
        right_fill,
    );
    if spec.include_line {
        canvas.line(
            &mut out,
            Point2 { x: 0.0, y: 1.0 },
            Point2 { x: 1.0, y: 0.0 },
        );
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

/// Square, circle, the segment from `(0, 1)` to `(1, 0)` and the S-curve as
/// a polyline of exactly `samples` uniform points.
pub fn render_construction(spec: &DiagramSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    if !spec.include_line {
        return Err(TaijiError::InvalidSpec(
            "the construction figure requires include_line".into(),
        ));
    }
    let canvas = Canvas {
        size: f64::from(spec.canvas_px),
    };
    let mut out = String::new();
    canvas.header(&mut out, spec.canvas_px);
    canvas.square(&mut out);
    canvas.circle(&mut out, "circle", CENTER, 0.5, "none");
    canvas.line(
        &mut out,
        Point2 { x: 0.0, y: 1.0 },
        Point2 { x: 1.0, y: 0.0 },
    );
    let points = (0..spec.samples)
        .map(|i| {
            let p = s_curve(uniform_abscissa(i, spec.samples)).point();
            format!("{},{}", canvas.x(p.x), canvas.y(p.y))
        })
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(
        out,
        "  <polyline id=\"s-curve\" points=\"{points}\" fill=\"none\" stroke=\"{STROKE}\" stroke-width=\"{}\"/>",
        fixed(2.0, 6),
    );
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

/// Distance from each eye centre to the boundary of the fish that holds it,
/// in unit coordinates: `(left, right)`.
pub fn eye_clearance(spec: &DiagramSpec) -> (f64, f64) {
    let curve = fish_curve_points(spec.samples.max(2));
    let l = landmarks();
    let clearance = |eye: Point2| {
        let to_circle = 0.5 - eye.distance(CENTER);
        curve
            .windows(2)
            .map(|w| segment_distance(eye, w[0], w[1]))
            .fold(to_circle, f64::min)
    };
    (clearance(l.eye_left), clearance(l.eye_right))
}

fn segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    };
    p.distance(Point2 {
        x: a.x + t * dx,
        y: a.y + t * dy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::half_chord;

    fn circle_ordinate(x: f64, lower: bool) -> f64 {
        let r = half_chord(x);
        if lower {
            0.5 - r
        } else {
            0.5 + r
        }
    }

    fn text(bytes: Vec<u8>) -> String {
        String::from_utf8(bytes).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(DiagramSpec::default().validate().is_ok());
        let bad = [
            DiagramSpec {
                samples: 2,
                ..Default::default()
            },
            DiagramSpec {
                canvas_px: 32,
                ..Default::default()
            },
            DiagramSpec {
                eye_radius: 0.3,
                ..Default::default()
            },
            DiagramSpec {
                eye_radius: 0.0,
                ..Default::default()
            },
            DiagramSpec {
                eye_radius: f64::NAN,
                ..Default::default()
            },
        ];
        for spec in bad {
            assert!(
                matches!(render_diagram(&spec), Err(TaijiError::InvalidSpec(_))),
                "{spec:?}"
            );
        }
        let no_line = DiagramSpec {
            include_line: false,
            ..DiagramSpec::construction()
        };
        assert!(matches!(
            render_construction(&no_line),
            Err(TaijiError::InvalidSpec(_))
        ));
    }

    #[test]
    fn element_order() {
        let spec = DiagramSpec {
            include_square: true,
            include_line: true,
            ..Default::default()
        };
        let svg = text(render_diagram(&spec).unwrap());
        let ids = [
            "\"square\"",
            "\"circle\"",
            "\"fish-dark\"",
            "\"fish-light\"",
            "\"eye-left\"",
            "\"eye-right\"",
            "\"line\"",
        ];
        let pos: Vec<usize> = ids.iter().map(|id| svg.find(id).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
        assert!(svg.contains("viewBox=\"0 0 512 512\""));
        assert!(svg.ends_with("</svg>\n"));

        let plain = text(render_diagram(&DiagramSpec::default()).unwrap());
        assert!(!plain.contains("id=\"square\""));
        assert!(!plain.contains("id=\"line\""));
    }

    #[test]
    fn swap_exchanges_fills_and_eyes() {
        let normal = text(render_diagram(&DiagramSpec::default()).unwrap());
        let swapped = text(
            render_diagram(&DiagramSpec {
                dark_below: false,
                ..Default::default()
            })
            .unwrap(),
        );
        let attr = |svg: &str, id: &str, key: &str| -> String {
            crate::raster::element_attr(svg, id, key)
                .unwrap()
                .to_string()
        };
        assert_eq!(attr(&normal, "eye-left", "fill"), LIGHT);
        assert_eq!(attr(&normal, "eye-right", "fill"), DARK);
        assert_eq!(attr(&swapped, "eye-left", "fill"), DARK);
        assert_eq!(attr(&swapped, "eye-right", "fill"), LIGHT);
        assert_eq!(attr(&normal, "fish-dark", "fill"), DARK);
        assert_eq!(attr(&swapped, "fish-dark", "fill"), DARK);
        // The dark outline switches arcs: lower arc normally, upper arc swapped.
        assert!(attr(&normal, "fish-dark", "d").contains(" 0 0 1 "));
        assert!(attr(&swapped, "fish-dark", "d").contains(" 0 0 0 "));
        assert_eq!(
            attr(&normal, "fish-dark", "d"),
            attr(&swapped, "fish-light", "d")
        );
    }

    #[test]
    fn fish_curve_contains_extrema() {
        let pts = fish_curve_points(256);
        assert_eq!(pts.len(), 258);
        let top = pts
            .iter()
            .copied()
            .fold(pts[0], |a, b| if b.y > a.y { b } else { a });
        assert!((top.y - 0.75).abs() <= 1e-12);
        assert!((top.x - 0.146_447).abs() <= 1e-6);
        assert_eq!((pts[0].x, pts[0].y), (0.0, 0.5));
        assert_eq!((pts[257].x, pts[257].y), (1.0, 0.5));
    }

    #[test]
    fn eyes_are_contained() {
        let spec = DiagramSpec::default();
        let (l, r) = eye_clearance(&spec);
        assert!(l > spec.eye_radius && r > spec.eye_radius);
        // The exact curve keeps each eye 1/2 - √2/4 from its fish boundary;
        // the sampled outline cuts corners slightly.
        let exact = 0.5 - std::f64::consts::SQRT_2 / 4.0;
        assert!(l <= exact && exact - l < 1e-3, "{l}");
        assert!((l - r).abs() < 1e-9);
    }

    #[test]
    fn eyes_lie_in_expected_fish() {
        let l = landmarks();
        let below = |p: Point2| {
            p.y < s_curve(UnitValue::new(p.x).unwrap()).y && p.y > circle_ordinate(p.x, true)
        };
        assert!(below(l.eye_left));
        assert!(!below(l.eye_right));
        assert!(l.eye_right.y < circle_ordinate(l.eye_right.x, false));
    }

    #[test]
    fn construction_structure() {
        let svg = text(render_construction(&DiagramSpec::construction()).unwrap());
        assert_eq!(svg.matches("<line ").count(), 1);
        assert_eq!(svg.matches("<polyline ").count(), 1);
        let start = svg.find("points=\"").unwrap() + 8;
        let pts: Vec<&str> = svg[start..start + svg[start..].find('"').unwrap()]
            .split(' ')
            .collect();
        assert_eq!(pts.len(), 256);
        assert_eq!(pts[0], "0.000000,256.000000");
        assert_eq!(pts[255], "512.000000,256.000000");
    }

    #[test]
    fn rendering_is_deterministic() {
        let spec = DiagramSpec::default();
        assert_eq!(
            render_diagram(&spec).unwrap(),
            render_diagram(&spec).unwrap()
        );
        let c = DiagramSpec::construction();
        assert_eq!(
            render_construction(&c).unwrap(),
            render_construction(&c).unwrap()
        );
    }
}
